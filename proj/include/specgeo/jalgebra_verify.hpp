#pragma once

#include <optional>
#include <string>

#include "specgeo/hypersurface.hpp"
#include "specgeo/jalgebra.hpp"

namespace specgeo {

struct AlgebraReport {
  bool jacobi = false;
  bool j_square = false;
  bool j_orthogonal = false;
  bool solvable = false;
  int derived_length = 0;
  bool normal_one_form = false;
  bool nabla_J_parallel = false;
  bool ad_eigenvalues_real = false; // numeric reading of "splittable"
  std::vector<std::string> failures;

  bool all_exact_pass() const {
    return jacobi && j_square && j_orthogonal && solvable && normal_one_form &&
           nabla_J_parallel;
  }
};

namespace detail {

/// Echelon basis of the span of the given vectors.
inline std::vector<ExactVec> span_basis(std::vector<ExactVec> vecs, int dim) {
  if (vecs.empty()) return {};
  auto [ech, pivots] = exact_row_echelon(std::move(vecs));
  std::vector<ExactVec> out;
  for (size_t r = 0; r < pivots.size(); ++r) out.push_back(ech[r]);
  (void)dim;
  return out;
}

inline std::vector<ExactVec> derived_subalgebra(const MetricLieAlgebra& L,
                                                const std::vector<ExactVec>& basis) {
  std::vector<ExactVec> brackets;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j)
      brackets.push_back(L.bracket(basis[i], basis[j]));
  return span_basis(std::move(brackets), L.dim());
}

} // namespace detail

/// Koszul connection coefficients of the left-invariant metric:
/// 2 <nabla_i e_j, e_k> = <[e_i,e_j],e_k> - <[e_j,e_k],e_i> + <[e_k,e_i],e_j>.
inline std::vector<std::vector<ExactVec>> koszul_connection(const MetricLieAlgebra& L) {
  int n = L.dim();
  bool diag = true;
  for (int i = 0; i < n && diag; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !L.gram()[i][j].is_zero()) {
        diag = false;
        break;
      }
  std::vector<std::vector<ExactVec>> gamma(n, std::vector<ExactVec>(n));
  Scalar half(1, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ExactVec rhs(n, Scalar(0));
      for (int k = 0; k < n; ++k) {
        Scalar s = L.inner_basis(L.bracket(i, j), k) -
                   L.inner_basis(L.bracket(j, k), i) + L.inner_basis(L.bracket(k, i), j);
        rhs[k] = half * s;
      }
      if (diag) {
        for (int k = 0; k < n; ++k)
          if (!rhs[k].is_zero()) rhs[k] /= L.gram()[k][k];
        gamma[i][j] = std::move(rhs);
      } else {
        auto sol = exact_solve(L.gram(), rhs);
        if (!sol) throw DegenerateMetricError("koszul_connection: Gram matrix singular");
        gamma[i][j] = *sol;
      }
    }
  return gamma;
}

/// Runs the full axiom suite: Jacobi, J axioms, solvability, existence of the
/// 1-form with omega([X,Y]) = -<X, JY>, parallel J under the Koszul
/// connection, and the numeric real-spectrum check for splittability.
inline AlgebraReport verify_algebra(const MetricLieAlgebra& L) {
  AlgebraReport rep;
  int n = L.dim();

  rep.jacobi = true;
  for (int i = 0; i < n && rep.jacobi; ++i)
    for (int j = i + 1; j < n && rep.jacobi; ++j)
      for (int k = j + 1; k < n && rep.jacobi; ++k) {
        ExactVec s = L.bracket(L.bracket(i, j), L.basis_vector(k));
        ExactVec t = L.bracket(L.bracket(j, k), L.basis_vector(i));
        ExactVec u = L.bracket(L.bracket(k, i), L.basis_vector(j));
        for (int m = 0; m < n; ++m)
          if (!(s[m] + t[m] + u[m]).is_zero()) {
            rep.jacobi = false;
            rep.failures.push_back("Jacobi fails on (" + L.labels()[i] + ", " +
                                   L.labels()[j] + ", " + L.labels()[k] + ")");
            break;
          }
      }

  // J^2 = -Id and <JX, JY> = <X, Y>
  ExactMat J2 = exact_mul(L.J(), L.J());
  rep.j_square = true;
  for (int i = 0; i < n && rep.j_square; ++i)
    for (int j = 0; j < n; ++j)
      if (!(J2[i][j] + Scalar(i == j ? 1 : 0)).is_zero()) {
        rep.j_square = false;
        rep.failures.push_back("J^2 != -Id");
        break;
      }
  rep.j_orthogonal = true;
  for (int i = 0; i < n && rep.j_orthogonal; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar v(0);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (!L.J()[a][i].is_zero() && !L.J()[b][j].is_zero())
            v += L.J()[a][i] * L.gram()[a][b] * L.J()[b][j];
      if (!(v - L.gram()[i][j]).is_zero()) {
        rep.j_orthogonal = false;
        rep.failures.push_back("J is not orthogonal");
        break;
      }
    }

  // solvability of the derived series, exactly
  std::vector<ExactVec> cur;
  for (int i = 0; i < n; ++i) cur.push_back(L.basis_vector(i));
  rep.derived_length = 0;
  while (!cur.empty()) {
    auto next = detail::derived_subalgebra(L, cur);
    ++rep.derived_length;
    if (next.size() >= cur.size()) break;
    cur = std::move(next);
  }
  rep.solvable = cur.empty();
  if (!rep.solvable) rep.failures.push_back("derived series does not terminate");

  // normal J-algebra 1-form: solve omega([e_i,e_j]) = -<e_i, J e_j>
  {
    std::vector<ExactVec> rows;
    ExactVec rhs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        rows.push_back(L.bracket(i, j));
        rhs.push_back(-L.inner(L.basis_vector(i), L.apply_J(L.basis_vector(j))));
      }
    rep.normal_one_form = exact_solve(rows, rhs).has_value();
    if (!rep.normal_one_form)
      rep.failures.push_back("no 1-form omega with omega([X,Y]) = -<X,JY> exists");
  }

  // parallel complex structure: nabla_i (J e_j) = J (nabla_i e_j)
  {
    auto gamma = koszul_connection(L);
    rep.nabla_J_parallel = true;
    for (int i = 0; i < n && rep.nabla_J_parallel; ++i)
      for (int j = 0; j < n; ++j) {
        ExactVec lhs(n, Scalar(0));
        for (int m = 0; m < n; ++m)
          if (!L.J()[m][j].is_zero())
            for (int k = 0; k < n; ++k) lhs[k] += L.J()[m][j] * gamma[i][m][k];
        ExactVec rhsv = L.apply_J(gamma[i][j]);
        for (int k = 0; k < n; ++k)
          if (!(lhs[k] - rhsv[k]).is_zero()) {
            rep.nabla_J_parallel = false;
            rep.failures.push_back("nabla J != 0 at (" + L.labels()[i] + ", " +
                                   L.labels()[j] + ")");
            break;
          }
      }
  }

  // splittable reading: all ad operators have real spectrum (numeric)
  {
    rep.ad_eigenvalues_real = true;
    for (int i = 0; i < n && rep.ad_eigenvalues_real; ++i) {
      Eigen::MatrixXd ad(n, n);
      for (int c = 0; c < n; ++c) {
        const ExactVec& b = L.bracket(i, c);
        for (int r = 0; r < n; ++r) ad(r, c) = b[r].to_double();
      }
      Eigen::EigenSolver<Eigen::MatrixXd> es(ad);
      double scale = std::max(1.0, ad.cwiseAbs().maxCoeff());
      for (int k = 0; k < n; ++k)
        if (std::abs(es.eigenvalues()[k].imag()) > 1e-8 * scale) {
          rep.ad_eigenvalues_real = false;
          rep.failures.push_back("ad_" + L.labels()[i] + " has non-real eigenvalues");
          break;
        }
    }
  }
  return rep;
}

/// Type-I axioms: b/Jb orthogonal decomposition, Jb an abelian ideal, B0
/// central in b and ad_{B0}|Jb = Id (equivalently ad_X JB0 = JX).
inline std::vector<std::string> check_type1_axioms(const MetricLieAlgebra& L,
                                                   const TypeIStructure& st) {
  std::vector<std::string> failures;
  auto is_zero_vec = [&](const ExactVec& v) {
    for (auto& c : v)
      if (!c.is_zero()) return false;
    return true;
  };
  for (int s : st.b_indices)
    for (int t : st.Jb_indices)
      if (!L.gram()[s][t].is_zero()) failures.push_back("b and Jb are not orthogonal");
  for (int s : st.Jb_indices)
    for (int t : st.Jb_indices)
      if (!is_zero_vec(L.bracket(s, t))) {
        failures.push_back("Jb is not abelian");
        goto ideal;
      }
ideal:
  for (int s = 0; s < L.dim(); ++s)
    for (int t : st.Jb_indices) {
      const ExactVec& b = L.bracket(s, t);
      for (int k = 0; k < L.dim(); ++k)
        if (!b[k].is_zero() &&
            std::find(st.Jb_indices.begin(), st.Jb_indices.end(), k) == st.Jb_indices.end()) {
          failures.push_back("Jb is not an ideal");
          goto central;
        }
    }
central:
  for (int s : st.b_indices) {
    ExactVec v = L.bracket(st.B0, L.basis_vector(s));
    if (!is_zero_vec(v)) {
      failures.push_back("B0 is not central in b");
      break;
    }
  }
  for (int t : st.Jb_indices) {
    ExactVec v = L.bracket(st.B0, L.basis_vector(t));
    v[t] -= Scalar(1);
    if (!is_zero_vec(v)) {
      failures.push_back("ad_B0 is not the identity on Jb");
      break;
    }
  }
  // ad_X JB0 = JX for X in b
  ExactVec JB0 = L.apply_J(st.B0);
  for (int s : st.b_indices) {
    ExactVec lhs = L.bracket(L.basis_vector(s), JB0);
    ExactVec rhs = L.apply_J(L.basis_vector(s));
    for (int k = 0; k < L.dim(); ++k)
      if (!(lhs[k] - rhs[k]).is_zero()) {
        failures.push_back("ad_X JB0 != JX for X = " + L.labels()[s]);
        goto done;
      }
  }
done:
  return failures;
}

struct InvarianceResult {
  bool exact_zero = true;
  double max_residual = 0.0;
  std::vector<HomoPoly> residuals; // one per b0 basis vector
};

/// Residual of the coadjoint invariance of h under b0:
/// (ad*_Y h)(eta) = -dh|_eta(ad_Y eta), computed symbolically and exactly.
inline InvarianceResult invariance_check(const MetricLieAlgebra& L, const TypeIStructure& st,
                                         const HomoPoly& h) {
  InvarianceResult res;
  int m = st.Jb_indices.size();
  if (h.n() != m) throw DimensionMismatch("invariance_check: h must live on Jb");
  for (const ExactVec& Y : st.b0_basis) {
    ExactMat A = L.ad_restricted(Y, st.Jb_indices);
    HomoPoly residual(m, h.degree());
    for (int r = 0; r < m; ++r) {
      HomoPoly dh = h.derivative(r);
      if (dh.is_zero()) continue;
      HomoPoly linear(m, 1);
      for (int c = 0; c < m; ++c) {
        if (A[r][c].is_zero()) continue;
        Exponents e(m, 0);
        e[c] = 1;
        linear.add_term(std::move(e), A[r][c]);
      }
      if (linear.is_zero()) continue;
      residual = residual - dh * linear; // -dh(ad_Y eta)
    }
    if (!residual.is_zero()) res.exact_zero = false;
    for (auto& [e, c] : residual.monomials())
      res.max_residual = std::max(res.max_residual, std::abs(c.to_double()));
    res.residuals.push_back(std::move(residual));
  }
  return res;
}

/// Rank of b0 ∋ X -> ad_X(JB0) ∈ Jb; the orbit is a hypersurface iff this
/// equals dim Jb - 1.
inline int orbit_rank(const MetricLieAlgebra& L, const TypeIStructure& st) {
  ExactVec JB0 = L.apply_J(st.B0);
  std::vector<ExactVec> rows;
  for (const ExactVec& Y : st.b0_basis) {
    ExactVec img = L.bracket(Y, JB0);
    ExactVec coords;
    for (int idx : st.Jb_indices) coords.push_back(img[idx]);
    rows.push_back(std::move(coords));
  }
  return exact_rank(rows);
}

struct PullbackResult {
  double max_deviation = 0.0;
  bool exact = true;
  Signature canonical_signature; // of the canonical metric at JB0
};

/// Tube metric of the Siegel domain over Jb at the point i JB0, pulled back
/// through the orbit map differential (b -> iJb, Jb -> Jb) and compared with
/// (1/d) <.,.>, all in exact arithmetic.
inline PullbackResult pullback_metric_check(const MetricLieAlgebra& L,
                                            const TypeIStructure& st, const HomoPoly& h) {
  int m = st.Jb_indices.size(), dim = L.dim(), d = h.degree();
  ExactVec JB0 = L.apply_J(st.B0);
  ExactVec eta0;
  for (int idx : st.Jb_indices) eta0.push_back(JB0[idx]);
  Scalar level = h.eval(eta0);
  if (level.is_zero()) throw DomainError("pullback_metric_check: h(JB0) = 0");
  HomoPoly h0 = level.inverse() * h;

  auto hess = h0.hessian_at(eta0);
  auto grad = h0.gradient_at(eta0);
  Scalar invd = Scalar(1, d);
  ExactMat G = exact_zero(m, m); // -(1/d) Hess log h0 at eta0 (h0(eta0) = 1)
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) G[i][j] = -invd * (hess[i][j] - grad[i] * grad[j]);
  if (exact_det(G).is_zero())
    throw DegenerateMetricError("pullback_metric_check: tube metric degenerate at iJB0");

  std::vector<int> jb_pos(dim, -1);
  for (int r = 0; r < m; ++r) jb_pos[st.Jb_indices[r]] = r;
  auto dphi = [&](int t) {
    // returns (x-part, y-part) of dphi(e_t) in Jb coordinates
    std::pair<ExactVec, ExactVec> out{ExactVec(m, Scalar(0)), ExactVec(m, Scalar(0))};
    if (jb_pos[t] >= 0) {
      out.first[jb_pos[t]] = Scalar(1);
    } else {
      ExactVec Jet = L.apply_J(L.basis_vector(t));
      for (int k = 0; k < dim; ++k)
        if (!Jet[k].is_zero()) {
          if (jb_pos[k] < 0)
            throw DomainError("pullback_metric_check: J(b) does not lie in Jb");
          out.second[jb_pos[k]] = Jet[k];
        }
    }
    return out;
  };
  auto quad = [&](const ExactVec& a, const ExactVec& b) {
    Scalar s(0);
    for (int i = 0; i < m; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; j < m; ++j)
        if (!G[i][j].is_zero() && !b[j].is_zero()) s += a[i] * G[i][j] * b[j];
    }
    return s;
  };
  PullbackResult res;
  for (int s = 0; s < dim; ++s) {
    auto [xs, ys] = dphi(s);
    for (int t = s; t < dim; ++t) {
      auto [xt, yt] = dphi(t);
      Scalar pull = quad(xs, xt) + quad(ys, yt);
      Scalar want = invd * L.gram()[s][t];
      Scalar dev = pull - want;
      if (!dev.is_zero()) {
        res.exact = false;
        res.max_deviation = std::max(res.max_deviation, std::abs(dev.to_double()));
      }
    }
  }
  res.canonical_signature = canonical_metric(h0, eta0).sig;
  return res;
}

} // namespace specgeo
