#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ptlab {

/// Nonnegative rational, always stored reduced. Big enough for every exact
/// probability and win-rate this library produces.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  Rational() = default;

  Rational(std::uint64_t n, std::uint64_t d) {
    if (d == 0) {
      throw std::invalid_argument("Rational: zero denominator");
    }
    const std::uint64_t g = std::gcd(n, d);
    num = n / g;
    den = d / g;
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  bool operator==(const Rational&) const = default;

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

}  // namespace ptlab
