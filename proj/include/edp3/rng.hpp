#ifndef EDP3_RNG_HPP
#define EDP3_RNG_HPP

#include <cstdint>

namespace edp3 {

// SplitMix64: deterministic across platforms, unlike the standard library
// distributions. Good enough for instance generation.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n > 0. Modulo bias is irrelevant at these sizes.
  uint64_t below(uint64_t n) { return next() % n; }

  // Uniform in [lo, hi] inclusive.
  int range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
  }
};

}  // namespace edp3

#endif  // EDP3_RNG_HPP
