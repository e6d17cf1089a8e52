#pragma once

#include <cstdint>
#include <stdexcept>

namespace ptlab {

/// SplitMix64 generator (Steele, Lea, Flood 2014). Every seeded operation in
/// the library draws from this one algorithm so that reports carry a single
/// PRNG name and identical seeds reproduce identical streams on any platform.
class SplitMix64 {
 public:
  static constexpr const char* kAlgorithmName = "splitmix64";

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Unbiased draw from [0, bound) via rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound == 0) {
      throw std::invalid_argument("SplitMix64::next_below: bound must be positive");
    }
    if ((bound & (bound - 1)) == 0) {
      return next() & (bound - 1);
    }
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) {
        return r % bound;
      }
    }
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

}  // namespace ptlab
