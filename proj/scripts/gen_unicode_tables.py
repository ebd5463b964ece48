#!/usr/bin/env python3
"""Generate src/unicode_tables.inc from Python's unicodedata.

Emits sorted tables for canonical decomposition, canonical combining
classes, primary composites, and simple lowercase mappings. Hangul is
handled algorithmically in C++ and excluded here.

Run from the repository root:  python3 scripts/gen_unicode_tables.py
"""

import sys
import unicodedata

HANGUL_S_BASE = 0xAC00
HANGUL_S_COUNT = 11172


def is_hangul_syllable(cp):
    return HANGUL_S_BASE <= cp < HANGUL_S_BASE + HANGUL_S_COUNT


def canonical_decomposition(cp):
    """Non-recursive canonical decomposition, or None."""
    raw = unicodedata.decomposition(chr(cp))
    if not raw or raw.startswith("<"):
        return None
    return [int(f, 16) for f in raw.split()]


def main(out_path):
    max_cp = 0x110000
    decomp = {}   # cp -> full canonical (NFD) expansion
    ccc = {}      # cp -> nonzero combining class
    compose = {}  # (a, b) -> primary composite
    lower = {}    # cp -> lowercase expansion (when different)

    for cp in range(max_cp):
        if 0xD800 <= cp <= 0xDFFF or is_hangul_syllable(cp):
            continue
        ch = chr(cp)

        cc = unicodedata.combining(ch)
        if cc:
            ccc[cp] = cc

        nfd = unicodedata.normalize("NFD", ch)
        if len(nfd) != 1 or nfd != ch:
            decomp[cp] = [ord(c) for c in nfd]

        raw = canonical_decomposition(cp)
        if raw and len(raw) == 2:
            pair = chr(raw[0]) + chr(raw[1])
            if unicodedata.normalize("NFC", pair) == ch:
                compose[(raw[0], raw[1])] = cp

        lo = ch.lower()
        if lo != ch:
            lower[cp] = [ord(c) for c in lo]

    # Flatten decomposition / lowercase expansions into a shared pool.
    pool = []

    def intern(seq):
        off = len(pool)
        pool.extend(seq)
        return off

    decomp_rows = []
    for cp in sorted(decomp):
        seq = decomp[cp]
        decomp_rows.append((cp, intern(seq), len(seq)))

    lower_rows = []
    for cp in sorted(lower):
        seq = lower[cp]
        lower_rows.append((cp, intern(seq), len(seq)))

    with open(out_path, "w") as f:
        w = f.write
        w("// Generated by scripts/gen_unicode_tables.py (Unicode %s). Do not edit.\n\n"
          % unicodedata.unidata_version)

        w("static const char32_t kCpPool[] = {\n")
        for i in range(0, len(pool), 12):
            w("    " + ", ".join("0x%X" % c for c in pool[i:i + 12]) + ",\n")
        w("};\n\n")

        w("struct CpExpansion { char32_t cp; uint32_t offset; uint8_t len; };\n\n")

        w("static const CpExpansion kDecomp[] = {\n")
        for cp, off, n in decomp_rows:
            w("    {0x%X, %d, %d},\n" % (cp, off, n))
        w("};\n\n")

        w("static const CpExpansion kLower[] = {\n")
        for cp, off, n in lower_rows:
            w("    {0x%X, %d, %d},\n" % (cp, off, n))
        w("};\n\n")

        w("struct CpClass { char32_t cp; uint8_t ccc; };\n\n")
        w("static const CpClass kCombiningClass[] = {\n")
        for cp in sorted(ccc):
            w("    {0x%X, %d},\n" % (cp, ccc[cp]))
        w("};\n\n")

        w("struct CpPair { char32_t first; char32_t second; char32_t composed; };\n\n")
        w("static const CpPair kCompose[] = {\n")
        for (a, b) in sorted(compose):
            w("    {0x%X, 0x%X, 0x%X},\n" % (a, b, compose[(a, b)]))
        w("};\n\n")

        counts = (len(decomp_rows), len(lower_rows), len(ccc), len(compose), len(pool))
        w("// decomp=%d lower=%d ccc=%d compose=%d pool=%d\n" % counts)

    print("wrote %s: decomp=%d lower=%d ccc=%d compose=%d pool=%d"
          % ((out_path,) + counts))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "src/unicode_tables.inc")
