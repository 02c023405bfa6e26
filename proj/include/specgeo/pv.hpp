#pragma once

#include <numeric>
#include <optional>
#include <string>

#include "specgeo/hypersurface.hpp"
#include "specgeo/linalg.hpp"
#include "specgeo/poly.hpp"
#include "specgeo/rng.hpp"

namespace specgeo {

/// Squared roots mu_j^2 as reduced fractions p_j/q_j with p_1 = q_1 = 1.
struct RootData {
  std::vector<std::pair<long, long>> fractions;

  static RootData from_rationals(std::vector<Rational> mu2) {
    if (mu2.empty()) throw DomainError("RootData: empty root list");
    for (auto& f : mu2)
      if (f <= 0) throw DomainError("RootData: mu^2 must be positive");
    std::sort(mu2.begin(), mu2.end());
    Rational base = mu2.front();
    RootData r;
    for (auto& f : mu2) {
      Rational v = f / base;
      v.canonicalize();
      r.fractions.emplace_back(v.get_num().get_si(), v.get_den().get_si());
    }
    return r;
  }
};

struct InvariantExponents {
  std::vector<long> exponents;
  long N = 1;
  long degree = 0;
  HomoPoly h; // prod a_j^{e_j}
};

/// The lowest-degree invariant monomial data: e_j = (q_j prod_{k!=j} p_k)/N,
/// N their gcd, d their sum.
inline InvariantExponents invariant_exponents(const RootData& R) {
  int l = R.fractions.size();
  std::vector<long> raw(l);
  for (int j = 0; j < l; ++j) {
    long v = R.fractions[j].second;
    for (int k = 0; k < l; ++k)
      if (k != j) v *= R.fractions[k].first;
    raw[j] = v;
  }
  long N = 0;
  for (long v : raw) N = std::gcd(N, v);
  InvariantExponents out;
  out.N = N;
  for (long v : raw) {
    out.exponents.push_back(v / N);
    out.degree += v / N;
  }
  Exponents e(l, 0);
  for (int j = 0; j < l; ++j) e[j] = static_cast<int>(out.exponents[j]);
  out.h = HomoPoly::monomial(l, std::move(e), Scalar(1));
  return out;
}

struct KeyRow {
  long degree;
  int rank;
  std::vector<std::pair<long, long>> mu2;
  HomoPoly h;
};

/// Enumerates the key-algebra-sum solutions with invariant degree <= d_max,
/// normalized so mu_1^2 = 1 and the fractions ascend.  The search is bounded
/// to reduced fractions with numerator and denominator <= d_max.
inline std::vector<KeyRow> enumerate_key_solutions(int d_max) {
  if (d_max < 2) throw DomainError("enumerate_key_solutions: d_max must be >= 2");
  std::vector<Rational> candidates;
  for (long p = 1; p <= d_max; ++p)
    for (long q = 1; q <= d_max; ++q)
      if (std::gcd(p, q) == 1 && p >= q) candidates.emplace_back(p, q); // fractions >= 1
  std::sort(candidates.begin(), candidates.end());
  std::vector<KeyRow> rows;
  // tuples (1 = c_0 <= c_1 <= ...) of length l - 1 over candidates
  for (int l = 2; l <= d_max; ++l) {
    std::vector<int> pick(l - 1, 0);
    while (true) {
      std::vector<Rational> mu2{Rational(1)};
      for (int i : pick) mu2.push_back(candidates[i]);
      RootData R = RootData::from_rationals(mu2);
      auto inv = invariant_exponents(R);
      if (inv.degree <= d_max && inv.degree >= 2)
        rows.push_back({inv.degree, l, R.fractions, inv.h});
      int pos = l - 2;
      while (pos >= 0 && pick[pos] == static_cast<int>(candidates.size()) - 1) --pos;
      if (pos < 0) break;
      int v = pick[pos] + 1;
      for (int i = pos; i < l - 1; ++i) pick[i] = v;
    }
  }
  std::sort(rows.begin(), rows.end(), [](const KeyRow& a, const KeyRow& b) {
    return std::tie(a.degree, a.rank, a.mu2) < std::tie(b.degree, b.rank, b.mu2);
  });
  return rows;
}

/// One classified module: invariant polynomial, infinitesimal action and a
/// reference point.  Exceptional entries carry metadata only (no evaluator).
struct CatalogEntry {
  std::string name;
  std::string module_desc;
  int dim = 0;
  int degree = 0;
  std::optional<HomoPoly> invariant;
  std::vector<ExactMat> action; // rho(X) on V for a basis of g (no scaling)
  ExactVec ref_point;
  std::string isotropy;

  bool implemented() const { return invariant.has_value(); }
};

namespace pvdetail {

// builds the matrix of a linear map on R^n from its action on basis vectors
template <class F> ExactMat matrix_of(int n, F&& apply) {
  ExactMat m = exact_zero(n, n);
  for (int c = 0; c < n; ++c) {
    ExactVec e(n, Scalar(0));
    e[c] = Scalar(1);
    ExactVec img = apply(e);
    for (int r = 0; r < n; ++r) m[r][c] = img[r];
  }
  return m;
}

inline std::vector<ExactMat> sl_basis(int n) {
  std::vector<ExactMat> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      ExactMat e = exact_zero(n, n);
      e[i][j] = Scalar(1);
      out.push_back(std::move(e));
    }
  for (int i = 0; i + 1 < n; ++i) {
    ExactMat e = exact_zero(n, n);
    e[i][i] = Scalar(1);
    e[i + 1][i + 1] = Scalar(-1);
    out.push_back(std::move(e));
  }
  return out;
}

inline std::vector<ExactMat> so_kl_basis(int k, int l) {
  int n = k + l;
  std::vector<int> eta(n, 1);
  for (int i = k; i < n; ++i) eta[i] = -1;
  std::vector<ExactMat> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      // X = E_ij - eta_i eta_j E_ji satisfies X^T Q + Q X = 0
      ExactMat e = exact_zero(n, n);
      e[i][j] = Scalar(1);
      e[j][i] = Scalar(-eta[i] * eta[j]);
      out.push_back(std::move(e));
    }
  return out;
}

inline std::vector<ExactMat> sp_basis(int n) { // sp(n, R) on R^{2n}
  std::vector<ExactMat> out;
  // X = [[A, B], [C, -A^T]] with B, C symmetric
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ExactMat e = exact_zero(2 * n, 2 * n);
      e[i][j] = Scalar(1);
      e[n + j][n + i] = Scalar(-1);
      out.push_back(std::move(e));
    }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      ExactMat b = exact_zero(2 * n, 2 * n);
      b[i][n + j] = Scalar(1);
      b[j][n + i] = Scalar(1);
      out.push_back(std::move(b));
      ExactMat c = exact_zero(2 * n, 2 * n);
      c[n + i][j] = Scalar(1);
      c[n + j][i] = Scalar(1);
      out.push_back(std::move(c));
    }
  return out;
}

/// Exact determinant of a matrix of linear coordinate polynomials, expanded
/// by permutations (n <= 3 here).
inline HomoPoly det_poly(int n, const std::vector<std::vector<int>>& var_of, int nvars,
                         const std::vector<std::vector<Scalar>>& coeff_of) {
  HomoPoly out(nvars, n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    Exponents e(nvars, 0);
    Scalar c(inv % 2 ? -1 : 1);
    for (int i = 0; i < n; ++i) {
      e[var_of[i][perm[i]]] += 1;
      c *= coeff_of[i][perm[i]];
    }
    out.add_term(std::move(e), c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// All perfect matchings of {0..2m-1} with signs: the combinatorial Pfaffian.
inline void matchings_rec(std::vector<int>& left, std::vector<std::pair<int, int>>& cur,
                          std::vector<std::vector<std::pair<int, int>>>& out) {
  if (left.empty()) {
    out.push_back(cur);
    return;
  }
  int a = left.front();
  for (size_t t = 1; t < left.size(); ++t) {
    int b = left[t];
    std::vector<int> rest;
    for (size_t s = 1; s < left.size(); ++s)
      if (s != t) rest.push_back(left[s]);
    cur.emplace_back(a, b);
    matchings_rec(rest, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<std::pair<int, int>>> perfect_matchings(int m2) {
  std::vector<int> all(m2);
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> cur;
  matchings_rec(all, cur, out);
  return out;
}

inline int matching_sign(const std::vector<std::pair<int, int>>& match) {
  std::vector<int> flat;
  for (auto& [a, b] : match) {
    flat.push_back(a);
    flat.push_back(b);
  }
  int inv = 0;
  for (size_t i = 0; i < flat.size(); ++i)
    for (size_t j = i + 1; j < flat.size(); ++j)
      if (flat[i] > flat[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

} // namespace pvdetail

/// Combinatorial Pfaffian: sum over perfect matchings with signs.
inline Scalar pfaffian_matchings(const ExactMat& A) {
  int n = A.size();
  if (n % 2) throw DomainError("pfaffian: odd dimension");
  Scalar total(0);
  for (auto& match : pvdetail::perfect_matchings(n)) {
    Scalar term(pvdetail::matching_sign(match));
    for (auto& [a, b] : match) term *= A[a][b];
    total += term;
  }
  return total;
}

/// Index of the skew coordinate a_{ij}, i < j, in the Lambda^2 R^6 layout.
inline int skew_index(int i, int j, int n = 6) {
  if (i > j) std::swap(i, j);
  int idx = 0;
  for (int r = 0; r < i; ++r) idx += n - 1 - r;
  return idx + (j - i - 1);
}

/// The classified modules with transitive reductive actions on cubic (and the
/// quadratic pseudo-sphere) hypersurfaces.
inline std::vector<CatalogEntry> catalog() {
  using namespace pvdetail;
  std::vector<CatalogEntry> entries;

  { // V9: 3x3 real matrices under SL(3) x SL(3), invariant det, vec row-major
    CatalogEntry e;
    e.name = "det3-V9";
    e.module_desc = "R^3 (x) R^3, SL(3,R) x SL(3,R), h = det";
    e.dim = 9;
    e.degree = 3;
    e.isotropy = "SL(3,R) (graph of A -> A^{-T})";
    std::vector<std::vector<int>> var_of(3, std::vector<int>(3));
    std::vector<std::vector<Scalar>> coeff_of(3, std::vector<Scalar>(3, Scalar(1)));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) var_of[i][j] = 3 * i + j;
    e.invariant = det_poly(3, var_of, 9, coeff_of);
    auto apply_pair = [&](const ExactMat& X, const ExactMat& Y, const ExactVec& v) {
      // A -> X A + A Y^T on vec_rowmajor(A)
      ExactVec out(9, Scalar(0));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          Scalar s(0);
          for (int k = 0; k < 3; ++k)
            s += X[i][k] * v[3 * k + j] + v[3 * i + k] * Y[j][k];
          out[3 * i + j] = s;
        }
      return out;
    };
    ExactMat zero3 = exact_zero(3, 3);
    for (auto& X : sl_basis(3))
      e.action.push_back(matrix_of(9, [&](const ExactVec& v) { return apply_pair(X, zero3, v); }));
    for (auto& Y : sl_basis(3))
      e.action.push_back(matrix_of(9, [&](const ExactVec& v) { return apply_pair(zero3, Y, v); }));
    e.ref_point.assign(9, Scalar(0));
    e.ref_point[0] = e.ref_point[4] = e.ref_point[8] = Scalar(1);
    entries.push_back(std::move(e));
  }

  { // V6: Sym^2 R^3 under SL(3), S -> X S + S X^T, invariant det
    CatalogEntry e;
    e.name = "det3-sym-V6";
    e.module_desc = "Sym^2 R^3, SL(3,R), h = det";
    e.dim = 6;
    e.degree = 3;
    e.isotropy = "SO(3)";
    // coordinates (s11, s12, s13, s22, s23, s33)
    auto sym_index = [](int i, int j) {
      if (i > j) std::swap(i, j);
      static const int idx[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
      return idx[i][j];
    };
    std::vector<std::vector<int>> var_of(3, std::vector<int>(3));
    std::vector<std::vector<Scalar>> coeff_of(3, std::vector<Scalar>(3, Scalar(1)));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) var_of[i][j] = sym_index(i, j);
    e.invariant = det_poly(3, var_of, 6, coeff_of);
    auto apply = [&](const ExactMat& X, const ExactVec& v) {
      // S -> X S + S X^T in packed coordinates
      ExactMat S(3, ExactVec(3));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) S[i][j] = v[sym_index(i, j)];
      ExactVec out(6, Scalar(0));
      for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
          Scalar s(0);
          for (int k = 0; k < 3; ++k) s += X[i][k] * S[k][j] + S[i][k] * X[j][k];
          out[sym_index(i, j)] = s;
        }
      return out;
    };
    for (auto& X : sl_basis(3))
      e.action.push_back(matrix_of(6, [&](const ExactVec& v) { return apply(X, v); }));
    e.ref_point = {Scalar(1), Scalar(0), Scalar(0), Scalar(1), Scalar(0), Scalar(1)};
    entries.push_back(std::move(e));
  }

  { // V15: Lambda^2 R^6 under SL(6), A -> X A + A X^T, invariant = S6 Pfaffian sum
    CatalogEntry e;
    e.name = "pfaffian-V15";
    e.module_desc = "Lambda^2 R^6, SL(6,R), h = Pff (S6 sum normalization)";
    e.dim = 15;
    e.degree = 3;
    e.isotropy = "Sp(3,R)";
    // h = 48 * sum over matchings: the S6-sum collapses to 48 per matching
    HomoPoly h(15, 3);
    for (auto& match : perfect_matchings(6)) {
      Exponents ex(15, 0);
      for (auto& [a, b] : match) ex[skew_index(a, b)] += 1;
      h.add_term(std::move(ex), Scalar(48 * matching_sign(match)));
    }
    e.invariant = std::move(h);
    auto apply = [&](const ExactMat& X, const ExactVec& v) {
      ExactMat A = exact_zero(6, 6);
      for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
          A[i][j] = v[skew_index(i, j)];
          A[j][i] = -v[skew_index(i, j)];
        }
      ExactVec out(15, Scalar(0));
      for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
          Scalar s(0);
          for (int k = 0; k < 6; ++k) s += X[i][k] * A[k][j] + A[i][k] * X[j][k];
          out[skew_index(i, j)] = s;
        }
      return out;
    };
    for (auto& X : sl_basis(6))
      e.action.push_back(matrix_of(15, [&](const ExactVec& v) { return apply(X, v); }));
    e.ref_point.assign(15, Scalar(0));
    // standard symplectic J6 = [[0, I3], [-I3, 0]]
    e.ref_point[skew_index(0, 3)] = Scalar(1);
    e.ref_point[skew_index(1, 4)] = Scalar(1);
    e.ref_point[skew_index(2, 5)] = Scalar(1);
    entries.push_back(std::move(e));
  }

  // pseudo-sphere quadrics q_{k,l} under so(k, l)
  for (auto [k, l] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {3, 1}}) {
    CatalogEntry e;
    int n = k + l;
    e.name = "q(" + std::to_string(k) + "," + std::to_string(l) + ")";
    e.module_desc = "R^{" + std::to_string(k) + "," + std::to_string(l) + "}, SO(k,l), h = <X,X>";
    e.dim = n;
    e.degree = 2;
    e.isotropy = "SO(k-1,l)";
    HomoPoly q(n, 2);
    for (int i = 0; i < n; ++i) {
      Exponents ex(n, 0);
      ex[i] = 2;
      q.add_term(std::move(ex), Scalar(i < k ? 1 : -1));
    }
    e.invariant = std::move(q);
    e.action = so_kl_basis(k, l);
    e.ref_point.assign(n, Scalar(0));
    e.ref_point[0] = Scalar(1);
    entries.push_back(std::move(e));
  }

  { // V{4n}, n = 2: 2n x 2 matrices under sp(n,R) + sl(2), q(A) = Pff(A^T J A)
    CatalogEntry e;
    int n = 2, rows = 2 * n, dim = 2 * rows;
    e.name = "pff-AtJA";
    e.module_desc = "R^{2n} (x) R^2 (n = 2), Sp(n,R) x SL(2,R), q = Pff(A^T J A)";
    e.dim = dim; // vec row-major: a_{r c}, c in {0,1}
    e.degree = 2;
    e.isotropy = "Sp(n-1,R) x Sp(1,R)";
    // q(A) = col_0^T J col_1 = sum_i (a_{i,0} a_{n+i,1} - a_{n+i,0} a_{i,1})
    HomoPoly q(dim, 2);
    for (int i = 0; i < n; ++i) {
      Exponents p1(dim, 0);
      p1[2 * i + 0] += 1;
      p1[2 * (n + i) + 1] += 1;
      q.add_term(std::move(p1), Scalar(1));
      Exponents p2(dim, 0);
      p2[2 * (n + i) + 0] += 1;
      p2[2 * i + 1] += 1;
      q.add_term(std::move(p2), Scalar(-1));
    }
    e.invariant = std::move(q);
    auto apply_left = [&](const ExactMat& X, const ExactVec& v) {
      ExactVec out(dim, Scalar(0));
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < 2; ++c) {
          Scalar s(0);
          for (int k = 0; k < rows; ++k) s += X[r][k] * v[2 * k + c];
          out[2 * r + c] = s;
        }
      return out;
    };
    auto apply_right = [&](const ExactMat& Y, const ExactVec& v) {
      ExactVec out(dim, Scalar(0));
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < 2; ++c) {
          Scalar s(0);
          for (int k = 0; k < 2; ++k) s += v[2 * r + k] * Y[c][k];
          out[2 * r + c] = s;
        }
      return out;
    };
    for (auto& X : sp_basis(n))
      e.action.push_back(matrix_of(dim, [&](const ExactVec& v) { return apply_left(X, v); }));
    for (auto& Y : sl_basis(2))
      e.action.push_back(matrix_of(dim, [&](const ExactVec& v) { return apply_right(Y, v); }));
    e.ref_point.assign(dim, Scalar(0));
    e.ref_point[2 * 0 + 0] = Scalar(1);       // col 0 = e_1
    e.ref_point[2 * n + 1] = Scalar(1);       // col 1 = e_{n+1}
    entries.push_back(std::move(e));
  }

  // exceptional entries: catalog metadata only, invariants not evaluated
  {
    CatalogEntry e;
    e.name = "herm3-O-E6";
    e.module_desc = "Herm_3(O), E6^(-26), h = det (also the split form E6^(6))";
    e.dim = 27;
    e.degree = 3;
    e.isotropy = "F4";
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "spin7";
    e.module_desc = "spinor module of Spin(7), h = <X,X>";
    e.dim = 8;
    e.degree = 2;
    e.isotropy = "G2";
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "spin9";
    e.module_desc = "spinor module of Spin(9), h = <X,X>";
    e.dim = 16;
    e.degree = 2;
    e.isotropy = "Spin(7)";
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "g2-im-octonions";
    e.module_desc = "Im O, G2^(-14), h = <X,X>";
    e.dim = 7;
    e.degree = 2;
    e.isotropy = "SL(3) type stabilizer (documentation)";
    entries.push_back(std::move(e));
  }
  return entries;
}

inline const CatalogEntry& catalog_entry(const std::vector<CatalogEntry>& entries,
                                         const std::string& name) {
  for (auto& e : entries)
    if (e.name == name) return e;
  throw DomainError("catalog: no entry named '" + name + "'");
}

/// Max |dh|_v(rho(X) v) - chi(X) h(v)| over the generators and samples;
/// chi = 0 on the (semisimple) generators and chi = deg h for the scaling
/// direction, which reduces to the Euler identity.
inline double infinitesimal_invariance(const CatalogEntry& e, const std::vector<ExactVec>& samples) {
  if (!e.implemented()) throw UnimplementedEntry("no evaluator for " + e.name);
  const HomoPoly& h = *e.invariant;
  double worst = 0;
  for (const ExactVec& v : samples) {
    auto grad = h.gradient_at(v);
    for (const ExactMat& X : e.action) {
      ExactVec w = exact_apply(X, v);
      Scalar resid(0);
      for (int i = 0; i < e.dim; ++i) resid += grad[i] * w[i];
      worst = std::max(worst, std::abs(resid.to_double()));
    }
    // Euler / scaling character: dh|_v(v) = d h(v) exactly
    Scalar euler(0);
    for (int i = 0; i < e.dim; ++i) euler += grad[i] * v[i];
    euler -= Scalar(h.degree()) * h.eval(v);
    worst = std::max(worst, std::abs(euler.to_double()));
  }
  return worst;
}

/// Regularity at v: the full Hessian of h is nondegenerate there.
inline bool regularity_check(const CatalogEntry& e, const ExactVec& v) {
  if (!e.implemented()) throw UnimplementedEntry("no evaluator for " + e.name);
  return !exact_det(e.invariant->hessian_at(v)).is_zero();
}

struct OrbitDims {
  int rank_g = 0;   // span of g.v
  int rank_g1 = 0;  // with the scaling direction added
};

/// Orbit dimensions at v: the infinitesimal transitivity certificate is
/// rank_g >= dim V - 1, prehomogeneity of the extended group is
/// rank_g1 = dim V.
inline OrbitDims orbit_dimension(const CatalogEntry& e, const ExactVec& v) {
  if (e.action.empty()) throw UnimplementedEntry("no action matrices for " + e.name);
  std::vector<ExactVec> span;
  for (const ExactMat& X : e.action) span.push_back(exact_apply(X, v));
  OrbitDims out;
  out.rank_g = exact_rank(span);
  span.push_back(v);
  out.rank_g1 = exact_rank(span);
  return out;
}

enum class CubicCase { Irreducible, LinearTimesQuadric, ThreeLines, Violates };

inline std::string to_string(CubicCase c) {
  switch (c) {
    case CubicCase::Irreducible: return "case (1): irreducible";
    case CubicCase::LinearTimesQuadric: return "case (2): linear times quadric";
    case CubicCase::ThreeLines: return "case (3): three one-dimensional factors";
    default: return "violates theorem constraints";
  }
}

/// Classifies a cubic against the three reducibility cases: the basic cubic
/// must be a monomial of block-degree (d_1..d_r) with every d_j >= 1.
inline CubicCase monomial_structure(const HomoPoly& h, const BlockStructure& B) {
  if (h.degree() != 3) throw DomainError("monomial_structure: h must be cubic");
  auto parts = h.multidegree_split(B);
  if (parts.size() != 1) return CubicCase::Violates;
  const auto& deg = parts.begin()->first;
  for (int dj : deg)
    if (dj == 0) return CubicCase::Violates;
  switch (deg.size()) {
    case 1: return CubicCase::Irreducible;
    case 2: return CubicCase::LinearTimesQuadric;
    case 3: return CubicCase::ThreeLines;
    default: return CubicCase::Violates;
  }
}

} // namespace specgeo
