#pragma once

#include <cmath>

#include "specgeo/pseudometric.hpp"
#include "specgeo/symform.hpp"

namespace specgeo {

/// Radial projection X -> X / h(X)^(1/d), landing on the level set h = 1.
inline std::vector<double> project_to_level(const HomoPoly& h, std::vector<double> X) {
  double v = h.eval(X);
  if (!(v > 0)) throw NonpositiveLevelError("project_to_level: h(X) <= 0");
  double s = std::pow(v, -1.0 / h.degree());
  for (auto& x : X) x *= s;
  return X;
}

/// Exact tangent basis of the level set at X0: kernel of the gradient row,
/// columns ordered by free pivot index.
inline std::vector<ExactVec> tangent_basis(const HomoPoly& h, const ExactVec& X0) {
  ExactMat row(1, h.gradient_at(X0));
  return exact_kernel(row);
}

inline std::vector<std::vector<double>> tangent_basis(const HomoPoly& h,
                                                      const std::vector<double>& X0) {
  auto g = h.gradient_at(X0);
  int n = h.n(), p = 0;
  for (int i = 1; i < n; ++i)
    if (std::abs(g[i]) > std::abs(g[p])) p = i;
  if (g[p] == 0.0) throw DegenerateMetricError("tangent_basis: vanishing gradient");
  std::vector<std::vector<double>> basis;
  for (int j = 0; j < n; ++j) {
    if (j == p) continue;
    std::vector<double> v(n, 0.0);
    v[j] = 1.0;
    v[p] = -g[j] / g[p];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// A point of the hypersurface H_1(h) together with a tangent frame.
struct HypersurfacePoint {
  HomoPoly h;
  ExactVec X0;
  std::vector<ExactVec> tangent;

  static HypersurfacePoint at(const HomoPoly& h, ExactVec X0) {
    if (h.eval(X0) != Scalar(1))
      throw DomainError("HypersurfacePoint: h(X0) must equal 1 exactly");
    HypersurfacePoint p{h, std::move(X0), {}};
    p.tangent = tangent_basis(h, p.X0);
    return p;
  }
};

/// Full second-derivative matrix of h at X0 as a metric-with-signature.
inline PseudoMetric hessian_metric(const HomoPoly& h, const ExactVec& X0) {
  return PseudoMetric::from_exact(h.hessian_at(X0));
}

/// Hessian of log h at X0: Hess h / h - grad grad^T / h^2, exact.
inline PseudoMetric log_hessian_metric(const HomoPoly& h, const ExactVec& X0) {
  Scalar v = h.eval(X0);
  if (v.is_zero()) throw ZeroLevelError("log_hessian: h(X0) = 0");
  auto hess = h.hessian_at(X0);
  auto grad = h.gradient_at(X0);
  Scalar vinv = v.inverse(), vinv2 = vinv * vinv;
  int n = h.n();
  ExactMat out = exact_zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = hess[i][j] * vinv - grad[i] * grad[j] * vinv2;
  return PseudoMetric::from_exact(std::move(out));
}

namespace detail {

template <class R> bool entries_match(const R& a, const R& b, double tol);
inline bool entries_match(const Scalar& a, const Scalar& b, double) { return a == b; }
inline bool entries_match(double a, double b, double tol) { return std::abs(a - b) <= tol; }

} // namespace detail

/// Canonical metric on the tangent space at X0 in H_1(h), computed by all
/// three routes of the defining formula:
///   (1) -(d-1) H(X0,...,X0, v, w)  on the polarization,
///   (2) -(1/d) Hess h, and
///   (3) -(1/d) Hess log h,
/// restricted to the tangent frame.  The routes must agree (exactly over the
/// field, to `tol` for float points); disagreement is an internal bug.
template <class R>
std::vector<std::vector<R>> canonical_metric_gram(const HomoPoly& h, const std::vector<R>& X0,
                                                  const std::vector<std::vector<R>>& frame,
                                                  double tol = 1e-10) {
  int d = h.degree();
  if (d < 2) throw DomainError("canonical_metric: degree must be >= 2");
  SymForm H = SymForm::polarize(h);
  auto hess = h.hessian_at(X0);
  auto grad = h.gradient_at(X0);
  auto quadf = [&](const std::vector<std::vector<R>>& M, const std::vector<R>& a,
                   const std::vector<R>& b) {
    R s = ScalarCast<R>::cast(Scalar(0));
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) s = s + a[i] * M[i][j] * b[j];
    return s;
  };
  Scalar md1 = Scalar(-(d - 1));
  Scalar mid = Scalar(-1, d);
  size_t m = frame.size();
  std::vector<std::vector<R>> g(m, std::vector<R>(m, ScalarCast<R>::cast(Scalar(0))));
  for (size_t a = 0; a < m; ++a)
    for (size_t b = a; b < m; ++b) {
      R r1 = ScalarCast<R>::cast(md1) * H.eval_rep2(X0, frame[a], frame[b]);
      R r2 = ScalarCast<R>::cast(mid) * quadf(hess, frame[a], frame[b]);
      // route 3 keeps the gradient term of Hess log h even though it
      // vanishes on tangent vectors (h(X0) = 1 on the level set, so the
      // 1/h factors drop out)
      R ga = ScalarCast<R>::cast(Scalar(0)), gb = ga;
      for (size_t i = 0; i < grad.size(); ++i) {
        ga = ga + grad[i] * frame[a][i];
        gb = gb + grad[i] * frame[b][i];
      }
      R r3 = ScalarCast<R>::cast(mid) * (quadf(hess, frame[a], frame[b]) - ga * gb);
      if (!detail::entries_match(r1, r2, tol) || !detail::entries_match(r1, r3, tol))
        throw RouteMismatchError("canonical_metric: polarization and Hessian routes disagree");
      g[a][b] = g[b][a] = r1;
    }
  return g;
}

inline PseudoMetric canonical_metric(const HomoPoly& h, const ExactVec& X0) {
  if (h.eval(X0) != Scalar(1))
    throw DomainError("canonical_metric: h(X0) must equal 1 exactly");
  auto frame = tangent_basis(h, X0);
  return PseudoMetric::from_exact(canonical_metric_gram(h, X0, frame));
}

inline PseudoMetric canonical_metric(const HomoPoly& h, const std::vector<double>& X0,
                                     double tol = 1e-10) {
  if (std::abs(h.eval(X0) - 1.0) > 1e-12)
    throw DomainError("canonical_metric: h(X0) must equal 1 to 1e-12");
  auto frame = tangent_basis(h, X0);
  auto gram = canonical_metric_gram(h, X0, frame, tol);
  Eigen::MatrixXd g(frame.size(), frame.size());
  for (size_t i = 0; i < frame.size(); ++i)
    for (size_t j = 0; j < frame.size(); ++j) g(i, j) = gram[i][j];
  return PseudoMetric::from_float(std::move(g));
}

/// Symmetric-space symmetry of a pseudo sphere at X0:
/// sigma(X) = -X + 2 (<X,X0>/<X0,X0>) X0 with <,> the polarization of q.
inline ExactVec sphere_symmetry(const HomoPoly& q, const ExactVec& X0, const ExactVec& X) {
  if (q.degree() != 2) throw DomainError("sphere_symmetry: q must be quadratic");
  SymForm B = SymForm::polarize(q);
  Scalar denom = B.eval(std::vector<ExactVec>{X0, X0});
  if (denom.is_zero()) throw NullBasePointError("sphere_symmetry: <X0,X0> = 0");
  Scalar lambda = B.eval(std::vector<ExactVec>{X, X0}) / denom;
  ExactVec out(X.size());
  Scalar two_lambda = lambda + lambda;
  for (size_t i = 0; i < X.size(); ++i) out[i] = -X[i] + two_lambda * X0[i];
  return out;
}

} // namespace specgeo
