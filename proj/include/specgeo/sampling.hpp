#pragma once

#include "specgeo/linalg.hpp"
#include "specgeo/poly.hpp"
#include "specgeo/rng.hpp"

namespace specgeo {

/// All exponent vectors of total degree d in n variables, lexicographic.
inline std::vector<Exponents> exponent_vectors(int n, int d) {
  std::vector<Exponents> out;
  Exponents cur(n, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
  };
  rec(rec, 0, d);
  return out;
}

/// Random exact homogeneous polynomial: each monomial present with
/// probability ~1/2, coefficients small rationals, at least one term.
inline HomoPoly random_poly(Rng& rng, int n, int d) {
  auto exps = exponent_vectors(n, d);
  HomoPoly h(n, d);
  for (auto& e : exps)
    if (rng.next_u64() & 1) h.add_term(e, Scalar(rng.small_rational()));
  if (h.is_zero()) h.add_term(exps[rng.next_int(0, exps.size() - 1)], Scalar(rng.small_rational()));
  return h;
}

/// Dense random polynomial (every coefficient present and nonzero).
inline HomoPoly random_dense_poly(Rng& rng, int n, int d) {
  HomoPoly h(n, d);
  for (auto& e : exponent_vectors(n, d)) h.add_term(e, Scalar(rng.small_rational()));
  return h;
}

inline ExactVec random_exact_point(Rng& rng, int n) {
  ExactVec x;
  for (int i = 0; i < n; ++i) x.push_back(Scalar(rng.small_rational()));
  return x;
}

inline std::vector<double> random_double_point(Rng& rng, int n, double lo = -1.0,
                                               double hi = 1.0) {
  std::vector<double> x;
  for (int i = 0; i < n; ++i) x.push_back(rng.next_double(lo, hi));
  return x;
}

} // namespace specgeo
