#ifndef PARROTEVAL_BLEU_HPP
#define PARROTEVAL_BLEU_HPP

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "parroteval/text.hpp"

namespace parroteval {

constexpr int kBleuOrder = 4;

// Sufficient statistics for corpus BLEU. Integer counts, so partial sums
// recombine exactly regardless of how entries are grouped.
struct BleuStats {
  std::array<int64_t, kBleuOrder> match{};  // clipped n-gram matches
  std::array<int64_t, kBleuOrder> total{};  // hypothesis n-gram counts
  int64_t hyp_len = 0;
  int64_t eff_ref_len = 0;

  BleuStats& operator+=(const BleuStats& o) {
    for (int n = 0; n < kBleuOrder; ++n) {
      match[n] += o.match[n];
      total[n] += o.total[n];
    }
    hyp_len += o.hyp_len;
    eff_ref_len += o.eff_ref_len;
    return *this;
  }
};

struct BleuScore {
  double value = 0;  // 0..100
  std::array<double, kBleuOrder> precisions{};
  double brevity_penalty = 1.0;
  int64_t hyp_len = 0;
  int64_t eff_ref_len = 0;
  BleuStats stats;
};

// Clipped n-gram statistics for one hypothesis against its references.
// Clipping uses the maximum count of each n-gram in any single reference;
// the effective reference length is the one closest to the hypothesis
// length, shorter on ties.
BleuStats bleu_pair_stats(const TokenSeq& hypothesis, const std::vector<TokenSeq>& references);

// BLEU-4 from summed statistics, unsmoothed: zero precision at any order
// zeroes the score.
BleuScore bleu_from_stats(const BleuStats& stats);

// Corpus-level BLEU-4 over (hypothesis, references) pairs. Throws
// std::invalid_argument on an empty corpus or an entry without references.
BleuScore bleu_corpus(const std::vector<std::pair<TokenSeq, std::vector<TokenSeq>>>& pairs);

// Single-pair BLEU-4 with add-one smoothing on the n >= 2 match and total
// counts, reported on the 0-1 scale.
BleuScore bleu_sentence(const TokenSeq& hypothesis, const std::vector<TokenSeq>& references);

}  // namespace parroteval

#endif
