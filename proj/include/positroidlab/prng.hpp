#pragma once

#include <cstdint>

#include "positroidlab/rational.hpp"

namespace plab {

/// SplitMix64. Small, fast, and the stream is pinned by the seed alone,
/// which keeps every sampled certificate reproducible.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

  /// Strictly positive rational with small numerator and denominator.
  Rat positive_rational(unsigned span = 16) {
    long num = 1 + long(below(span));
    long den = 1 + long(below(span));
    return rat(num, den);
  }

  /// Rational in a symmetric range, possibly zero or negative.
  Rat signed_rational(unsigned span = 10) {
    long num = long(below(2 * span + 1)) - long(span);
    long den = 1 + long(below(span));
    return rat(num, den);
  }

 private:
  std::uint64_t state_;
};

}  // namespace plab
