#include "parroteval/text.hpp"

#include <algorithm>
#include <cstdint>

#include "parroteval/porter.hpp"

namespace parroteval {
namespace {

#include "unicode_tables.inc"

constexpr char32_t kReplacement = 0xFFFD;

// Hangul syllable composition/decomposition constants (UAX #15).
constexpr char32_t kSBase = 0xAC00, kLBase = 0x1100, kVBase = 0x1161, kTBase = 0x11A7;
constexpr int kLCount = 19, kVCount = 21, kTCount = 28;
constexpr int kNCount = kVCount * kTCount;
constexpr int kSCount = kLCount * kNCount;

const CpExpansion* find_expansion(const CpExpansion* table, size_t n, char32_t cp) {
  auto* end = table + n;
  auto* it = std::lower_bound(table, end, cp, [](const CpExpansion& e, char32_t c) {
    return e.cp < c;
  });
  return (it != end && it->cp == cp) ? it : nullptr;
}

uint8_t combining_class(char32_t cp) {
  auto* end = kCombiningClass + std::size(kCombiningClass);
  auto* it = std::lower_bound(kCombiningClass, end, cp, [](const CpClass& e, char32_t c) {
    return e.cp < c;
  });
  return (it != end && it->cp == cp) ? it->ccc : 0;
}

char32_t compose_pair(char32_t a, char32_t b) {
  // Hangul L+V and LV+T.
  if (a >= kLBase && a < kLBase + kLCount && b >= kVBase && b < kVBase + kVCount) {
    return kSBase + ((a - kLBase) * kVCount + (b - kVBase)) * kTCount;
  }
  if (a >= kSBase && a < kSBase + kSCount && (a - kSBase) % kTCount == 0 &&
      b > kTBase && b < kTBase + kTCount) {
    return a + (b - kTBase);
  }
  auto* end = kCompose + std::size(kCompose);
  auto* it = std::lower_bound(kCompose, end, std::pair<char32_t, char32_t>(a, b),
                              [](const CpPair& e, const std::pair<char32_t, char32_t>& k) {
                                return e.first != k.first ? e.first < k.first
                                                          : e.second < k.second;
                              });
  return (it != end && it->first == a && it->second == b) ? it->composed : 0;
}

void decompose_into(char32_t cp, std::u32string& out) {
  if (cp >= kSBase && cp < kSBase + kSCount) {
    int idx = static_cast<int>(cp - kSBase);
    out.push_back(kLBase + idx / kNCount);
    out.push_back(kVBase + (idx % kNCount) / kTCount);
    if (idx % kTCount) out.push_back(kTBase + idx % kTCount);
    return;
  }
  if (const CpExpansion* e = find_expansion(kDecomp, std::size(kDecomp), cp)) {
    for (int i = 0; i < e->len; ++i) out.push_back(kCpPool[e->offset + i]);
    return;
  }
  out.push_back(cp);
}

void lower_into(char32_t cp, std::u32string& out) {
  if (const CpExpansion* e = find_expansion(kLower, std::size(kLower), cp)) {
    for (int i = 0; i < e->len; ++i) out.push_back(kCpPool[e->offset + i]);
    return;
  }
  out.push_back(cp);
}

std::u32string decode_utf8(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    unsigned char c = s[i];
    char32_t cp;
    size_t len;
    if (c < 0x80) {
      cp = c;
      len = 1;
    } else if ((c >> 5) == 0x6) {
      cp = c & 0x1F;
      len = 2;
    } else if ((c >> 4) == 0xE) {
      cp = c & 0x0F;
      len = 3;
    } else if ((c >> 3) == 0x1E) {
      cp = c & 0x07;
      len = 4;
    } else {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    if (i + len > s.size()) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    bool ok = true;
    for (size_t j = 1; j < len; ++j) {
      unsigned char cc = s[i + j];
      if ((cc >> 6) != 0x2) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (cc & 0x3F);
    }
    if (!ok || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF) ||
        (len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000)) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

void encode_utf8(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// Stable-sorts combining marks by class within each run (canonical ordering).
void canonical_order(std::u32string& s) {
  for (size_t i = 1; i < s.size(); ++i) {
    uint8_t cc = combining_class(s[i]);
    if (cc == 0) continue;
    size_t j = i;
    char32_t c = s[i];
    while (j > 0 && combining_class(s[j - 1]) > cc) {
      s[j] = s[j - 1];
      --j;
    }
    s[j] = c;
  }
}

std::u32string compose_canonical(const std::u32string& in) {
  std::u32string out;
  out.reserve(in.size());
  ptrdiff_t starter = -1;
  uint8_t last_cc = 0;
  for (char32_t c : in) {
    uint8_t cc = combining_class(c);
    if (starter >= 0 &&
        (static_cast<size_t>(starter) == out.size() - 1 || last_cc < cc)) {
      if (char32_t p = compose_pair(out[starter], c)) {
        out[starter] = p;
        continue;
      }
    }
    out.push_back(c);
    if (cc == 0) {
      starter = static_cast<ptrdiff_t>(out.size()) - 1;
      last_cc = 0;
    } else {
      last_cc = cc;
    }
  }
  return out;
}

bool is_space_cp(char32_t cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool is_detach_punct(char c) {
  switch (c) {
    case '.': case ',': case '!': case '?': case ';': case ':':
    case '"': case '\'': case '(': case ')': case '[': case ']':
      return true;
    default:
      return false;
  }
}

bool is_ascii_alpha(char c) { return c >= 'a' && c <= 'z'; }

// Length of the contraction suffix letters following an apostrophe at w[i]
// ('s 'm 'd 'll 're 've), or 0 when the apostrophe is plain punctuation.
size_t contraction_suffix_len(std::string_view w, size_t i) {
  auto boundary = [&](size_t pos) { return pos >= w.size() || !is_ascii_alpha(w[pos]); };
  if (i + 2 < w.size()) {
    std::string_view two = w.substr(i + 1, 2);
    if ((two == "ll" || two == "re" || two == "ve") && boundary(i + 3)) return 2;
  }
  if (i + 1 < w.size()) {
    char c = w[i + 1];
    if ((c == 's' || c == 'm' || c == 'd') && boundary(i + 2)) return 1;
  }
  return 0;
}

void tokenize_word(std::string_view w, TokenSeq& out) {
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      out.push_back(cur);
      cur.clear();
    }
  };
  size_t i = 0;
  while (i < w.size()) {
    char c = w[i];
    if (is_detach_punct(c)) {
      if (c == '\'') {
        size_t n = contraction_suffix_len(w, i);
        if (n > 0) {
          flush();
          out.emplace_back(w.substr(i, 1 + n));
          i += 1 + n;
          continue;
        }
      }
      flush();
      out.emplace_back(1, c);
      ++i;
      continue;
    }
    if (c == 'n' && i + 2 < w.size() && w[i + 1] == '\'' && w[i + 2] == 't' &&
        (i + 3 >= w.size() || !is_ascii_alpha(w[i + 3]))) {
      flush();
      out.emplace_back("n't");
      i += 3;
      continue;
    }
    cur.push_back(c);
    ++i;
  }
  flush();
}

}  // namespace

std::string normalize(std::string_view raw) {
  std::u32string cps = decode_utf8(raw);

  std::u32string decomposed;
  decomposed.reserve(cps.size() + 8);
  for (char32_t cp : cps) decompose_into(cp, decomposed);

  std::u32string lowered;
  lowered.reserve(decomposed.size());
  for (char32_t cp : decomposed) lower_into(cp, lowered);

  // Case mapping can introduce precomposed characters; decompose once more
  // before reordering so composition sees pure NFD.
  std::u32string nfd;
  nfd.reserve(lowered.size());
  for (char32_t cp : lowered) decompose_into(cp, nfd);

  canonical_order(nfd);
  std::u32string nfc = compose_canonical(nfd);

  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (char32_t cp : nfc) {
    if (is_space_cp(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    encode_utf8(cp, out);
  }
  return out;
}

TokenSeq tokenize(std::string_view text) {
  TokenSeq out;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    size_t j = i;
    while (j < text.size() && text[j] != ' ') ++j;
    if (j > i) tokenize_word(text.substr(i, j - i), out);
    i = j;
  }
  return out;
}

std::string detokenize(const TokenSeq& tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

Token stem(const Token& token) {
  for (char c : token) {
    if (!is_ascii_alpha(c)) return token;
  }
  return porter_stem(token);
}

}  // namespace parroteval
