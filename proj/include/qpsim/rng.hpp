// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace qpsim {

// Counter-based pseudo-random stream (splitmix64). Unlike the std distributions,
// the draw sequence is fully specified, so results are reproducible across
// platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n) for small n.
  int uniform_int(int n) {
    int k = static_cast<int>(uniform() * n);
    return k < n ? k : n - 1;
  }

  static std::uint64_t mix(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

 private:
  std::uint64_t state_;
};

// Independent substream for one trajectory index. Workers may be assigned any
// partition of the index space and still draw identical per-trajectory streams.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(SplitMix64::mix(SplitMix64::mix(seed ^ 0x6a09e667f3bcc909ULL) + index));
}

}  // namespace qpsim
