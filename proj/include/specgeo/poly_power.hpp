#pragma once

#include <vector>

#include "specgeo/poly.hpp"
#include "specgeo/rng.hpp"

namespace specgeo {

namespace detail {

using UniPoly = std::vector<Scalar>; // coefficients, low to high

inline int uni_degree(const UniPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (!p[i].is_zero()) return i;
  return -1;
}

inline UniPoly uni_trim(UniPoly p) {
  int d = uni_degree(p);
  p.resize(d + 1 < 0 ? 0 : d + 1);
  return p;
}

inline UniPoly uni_derivative(const UniPoly& p) {
  UniPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(Scalar(static_cast<long>(i)) * p[i]);
  return uni_trim(d);
}

inline UniPoly uni_rem(UniPoly a, const UniPoly& b) {
  int db = uni_degree(b);
  Scalar lead_inv = b[db].inverse();
  while (uni_degree(a) >= db && uni_degree(a) >= 0) {
    int da = uni_degree(a);
    Scalar f = a[da] * lead_inv;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= f * b[i];
    a = uni_trim(a);
    if (a.empty()) break;
  }
  return a;
}

inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
  a = uni_trim(a);
  b = uni_trim(b);
  while (!b.empty() && uni_degree(b) >= 0) {
    UniPoly r = uni_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  // monic normalization
  int d = uni_degree(a);
  if (d >= 0) {
    Scalar inv = a[d].inverse();
    for (auto& c : a) c *= inv;
  }
  return a;
}

inline UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly r(a.size() + b.size() - 1, Scalar(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline UniPoly uni_pow(UniPoly base, int e) {
  UniPoly r{Scalar(1)};
  while (e) {
    if (e & 1) r = uni_mul(r, base);
    base = uni_mul(base, base);
    e >>= 1;
  }
  return r;
}

/// True when u is c * v^k over the complex numbers, decided through the
/// squarefree part: generically gcd(u, u') = v^{k-1} up to constant, so
/// u must be proportional to (u / gcd)^k.
inline bool uni_is_kth_power(const UniPoly& u, int k) {
  int d = uni_degree(u);
  if (d < 0 || d % k != 0) return false;
  if (d == 0) return true;
  UniPoly g = uni_gcd(u, uni_derivative(u));
  int dg = uni_degree(g);
  if (dg != d - d / k) return false;
  // candidate root v = u / g (degree d/k), by exact division
  UniPoly rem = u;
  UniPoly v(d / k + 1, Scalar(0));
  Scalar lead_inv = g[dg].inverse();
  for (int i = d / k; i >= 0; --i) {
    int cur = uni_degree(rem);
    if (cur < dg + i) { v[i] = Scalar(0); continue; }
    Scalar f = rem[dg + i] * lead_inv;
    v[i] = f;
    for (int j = 0; j <= dg; ++j) rem[j + i] -= f * g[j];
    rem = uni_trim(rem);
    rem.resize(d + 1, Scalar(0));
  }
  UniPoly vk = uni_pow(v, k);
  // compare up to a constant factor
  int dv = uni_degree(vk);
  if (dv != d) return false;
  Scalar c = u[d] / vk[d];
  for (int i = 0; i <= d; ++i)
    if (u[i] != c * vk[i]) return false;
  return true;
}

} // namespace detail

/// Heuristic test for Definition-style basicness: restricts h to random
/// rational affine lines and checks whether every restriction is a perfect
/// k-th power for some k | d, k > 1.  A certificate of power-ness on all
/// sampled lines is strong evidence; this is documented as a heuristic, not
/// a proof.
inline bool is_power_of_lower_degree(const HomoPoly& h, int lines = 20, uint64_t seed = 12345) {
  int d = h.degree();
  if (d <= 1) return false;
  std::vector<int> divisors;
  for (int k = 2; k <= d; ++k)
    if (d % k == 0) divisors.push_back(k);
  if (divisors.empty()) return false;
  Rng rng(seed);
  for (int k : divisors) {
    bool all_power = true;
    int tested = 0, attempts = 0;
    while (tested < lines && attempts < 10 * lines) {
      ++attempts;
      std::vector<Scalar> P, Q;
      for (int i = 0; i < h.n(); ++i) {
        P.push_back(Scalar(rng.small_rational()));
        Q.push_back(Scalar(rng.small_rational()));
      }
      auto u = detail::uni_trim(h.restrict_affine_line(P, Q));
      if (detail::uni_degree(u) != d) continue; // degenerate line, resample
      ++tested;
      if (!detail::uni_is_kth_power(u, k)) { all_power = false; break; }
    }
    if (all_power && tested == lines) return true;
  }
  return false;
}

} // namespace specgeo
