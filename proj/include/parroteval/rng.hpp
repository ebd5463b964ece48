#ifndef PARROTEVAL_RNG_HPP
#define PARROTEVAL_RNG_HPP

#include <cstdint>
#include <vector>

namespace parroteval {

// SplitMix64 (Steele/Lea/Vigna). Fully specified, platform-independent;
// all randomness in this project flows through it so that results are
// reproducible bit-for-bit from a single seed.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Unbiased draw from [0, bound) by rejection.
  uint64_t below(uint64_t bound) {
    uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  uint64_t state_;
};

// Mixes a stream key into a seed so per-entry generators are independent.
inline uint64_t mix_seed(uint64_t seed, uint64_t stream) {
  SplitMix64 g(seed ^ (0xA0761D6478BD642FULL * (stream + 1)));
  return g.next();
}

// k distinct indices from [0, n), ascending. Partial Fisher-Yates.
std::vector<size_t> sample_indices(size_t n, size_t k, SplitMix64& gen);

}  // namespace parroteval

#endif
