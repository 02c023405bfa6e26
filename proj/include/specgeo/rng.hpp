#pragma once

#include <cstdint>

#include "specgeo/scalar.hpp"

namespace specgeo {

/// Deterministic xorshift64* generator.  Used for all sampled checks so a
/// report is reproducible across platforms from its seed alone.
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  uint64_t next_u64() {
    uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545f4914f6cdd1dull;
  }

  /// Uniform integer in [lo, hi].
  long next_int(long lo, long hi) {
    return lo + static_cast<long>(next_u64() % static_cast<uint64_t>(hi - lo + 1));
  }

  double next_unit() { return (next_u64() >> 11) * (1.0 / 9007199254740992.0); }

  /// Uniform in [lo, hi).
  double next_double(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  /// Nonzero rational with numerator and denominator bounded by 16.
  Rational small_rational(long bound = 16) {
    long num = next_int(-bound, bound);
    if (num == 0) num = 1;
    long den = next_int(1, bound);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  /// Rational in the same bound, zero allowed.
  Rational small_rational_or_zero(long bound = 16) {
    long num = next_int(-bound, bound);
    long den = next_int(1, bound);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

private:
  uint64_t state_;
};

} // namespace specgeo
