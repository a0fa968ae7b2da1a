#pragma once

#include <cstdint>

namespace qwit {

// Deterministic 64-bit generator (SplitMix64).  Every stochastic routine in
// the library takes an explicit seed and draws from one of these, so results
// are reproducible across platforms -- std::mt19937 plus the standard
// distributions would not guarantee that.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with full 53-bit mantissa resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [lo, hi] inclusive.
  int uniform_int(int lo, int hi);

  // Standard normal via Box-Muller.
  double normal();

  // Stable per-item substream seed: mixes the master seed with an index so
  // that sample i is independent of how many draws earlier samples consumed.
  static std::uint64_t derive(std::uint64_t master, std::uint64_t index);

 private:
  std::uint64_t state_;
};

}  // namespace qwit
