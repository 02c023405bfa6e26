#pragma once

#include <complex>
#include <functional>
#include <memory>

#include "specgeo/fd.hpp"
#include "specgeo/pseudometric.hpp"
#include "specgeo/symform.hpp"
#include "specgeo/tube.hpp"

namespace specgeo {

using Cplx = std::complex<double>;

/// Fundamental algebraic data on V = T*C^{n+1}: coordinates
/// (z^0..z^n, p_0..p_n), the standard symplectic form
/// omega = sum dz^j (x) dp_j - dp_j (x) dz^j, and tau = componentwise
/// conjugation.  gamma(X, Y) = i omega(X, tau Y) is the associated Hermitian
/// form of split signature (n+1, n+1).
struct FundamentalData {
  int n; // complex dimension of V is 2n + 2

  int dim() const { return 2 * (n + 1); }

  Cplx omega(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v) const {
    check(u), check(v);
    int m = n + 1;
    Cplx s = 0;
    for (int j = 0; j < m; ++j) s += u[j] * v[m + j] - u[m + j] * v[j];
    return s;
  }

  Cplx gamma(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v) const {
    return Cplx(0, 1) * omega(u, v.conjugate());
  }

  /// Exact versions over the field, for the Hermiticity and signature lemma.
  CScalar omega(const std::vector<CScalar>& u, const std::vector<CScalar>& v) const {
    if (static_cast<int>(u.size()) != dim() || static_cast<int>(v.size()) != dim())
      throw DimensionMismatch("omega: vectors must have dimension 2n+2");
    int m = n + 1;
    CScalar s;
    for (int j = 0; j < m; ++j) s += u[j] * v[m + j] - u[m + j] * v[j];
    return s;
  }

  CScalar gamma(const std::vector<CScalar>& u, const std::vector<CScalar>& v) const {
    std::vector<CScalar> vc;
    vc.reserve(v.size());
    for (auto& c : v) vc.push_back(c.conj());
    CScalar w = omega(u, vc);
    return CScalar(Scalar(0), Scalar(1)) * w;
  }

  /// Gram matrix of gamma on the standard basis.
  Eigen::MatrixXcd gamma_gram() const {
    int m = dim();
    Eigen::MatrixXcd g(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Eigen::VectorXcd ei = Eigen::VectorXcd::Zero(m), ej = Eigen::VectorXcd::Zero(m);
        ei[i] = 1;
        ej[j] = 1;
        g(i, j) = gamma(ei, ej);
      }
    return g;
  }

private:
  void check(const Eigen::VectorXcd& u) const {
    if (u.size() != dim()) throw DimensionMismatch("vector must have dimension 2n+2");
  }
};

/// Rational function num(Z) / (z^0)^k with an exact homogeneous numerator;
/// closed under the partial derivatives needed for gradients and Hessians.
struct RationalFn {
  HomoPoly num; // in n+1 variables z^0..z^n
  int pole = 0;

  int homogeneity() const { return num.degree() - pole; }

  Cplx eval(const Eigen::VectorXcd& Z) const {
    std::vector<Cplx> z(Z.data(), Z.data() + Z.size());
    Cplx denom = 1.0;
    if (pole > 0) {
      if (std::abs(Z[0]) < 1e-12) throw PoleError("RationalFn: z^0 = 0");
      denom = std::pow(Z[0], pole);
    }
    return num.eval(z) / denom;
  }

  RationalFn derivative(int j) const {
    if (j == 0) {
      // d/dz0 [num / z0^k] = (num_z0 z0 - k num) / z0^{k+1}
      HomoPoly z0 = HomoPoly::monomial(num.n(), first_var(num.n()), Scalar(1));
      HomoPoly top = num.derivative(0) * z0 - Scalar(pole) * num;
      return {top, pole + 1};
    }
    return {num.derivative(j), pole};
  }

private:
  static Exponents first_var(int n) {
    Exponents e(n, 0);
    e[0] = 1;
    return e;
  }
};

/// Holomorphic function homogeneous of degree two, with gradient and complex
/// Hessian evaluators.  Realized exactly for rational functions p/q with
/// deg p = deg q + 2, in particular for the r-map images F_h.
struct BasicFunction {
  int nvars = 0; // n + 1
  std::function<Cplx(const Eigen::VectorXcd&)> value;
  std::function<Eigen::VectorXcd(const Eigen::VectorXcd&)> gradient;
  std::function<Eigen::MatrixXcd(const Eigen::VectorXcd&)> hessian;

  static BasicFunction from_rational(const RationalFn& f) {
    if (f.homogeneity() != 2)
      throw DomainError("BasicFunction: rational function must be homogeneous of degree 2");
    int m = f.num.n();
    auto grads = std::make_shared<std::vector<RationalFn>>();
    auto hesses = std::make_shared<std::vector<std::vector<RationalFn>>>();
    for (int j = 0; j < m; ++j) grads->push_back(f.derivative(j));
    for (int j = 0; j < m; ++j) {
      hesses->emplace_back();
      for (int k = 0; k < m; ++k) hesses->back().push_back((*grads)[j].derivative(k));
    }
    BasicFunction b;
    b.nvars = m;
    b.value = [f](const Eigen::VectorXcd& Z) { return f.eval(Z); };
    b.gradient = [grads, m](const Eigen::VectorXcd& Z) {
      Eigen::VectorXcd g(m);
      for (int j = 0; j < m; ++j) g[j] = (*grads)[j].eval(Z);
      return g;
    };
    b.hessian = [hesses, m](const Eigen::VectorXcd& Z) {
      Eigen::MatrixXcd h(m, m);
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) h(j, k) = (*hesses)[j][k].eval(Z);
      return h;
    };
    return b;
  }
};

/// Re-indexes h(x1..xn) as a polynomial in (z^0, z^1..z^n) ignoring z^0.
inline HomoPoly shift_vars(const HomoPoly& h) {
  HomoPoly out(h.n() + 1, h.degree());
  for (auto& [e, c] : h.monomials()) {
    Exponents shifted(h.n() + 1, 0);
    for (int i = 0; i < h.n(); ++i) shifted[i + 1] = e[i];
    out.add_term(std::move(shifted), c);
  }
  return out;
}

/// The r-map: h of degree d maps to F_h(Z) = h(z^1..z^n) / (z^0)^{d-2}.
inline BasicFunction r_map(const HomoPoly& h) {
  if (h.degree() < 2) throw DomainError("r_map: degree must be >= 2");
  return BasicFunction::from_rational({shift_vars(h), h.degree() - 2});
}

/// Point of the Lagrangean cone C_F: the lift (Z, dF|_Z) together with the
/// tangent frame, the columns of (Id, Hess F(Z)).
struct ConePoint {
  Eigen::VectorXcd Z;
  Eigen::VectorXcd lift;          // dimension 2n+2
  Eigen::MatrixXcd frame;         // (2n+2) x (n+1)

  static ConePoint at(const BasicFunction& F, const Eigen::VectorXcd& Z) {
    int m = F.nvars;
    ConePoint p;
    p.Z = Z;
    p.lift.resize(2 * m);
    p.lift.head(m) = Z;
    p.lift.tail(m) = F.gradient(Z);
    Eigen::MatrixXcd H = F.hessian(Z);
    p.frame.resize(2 * m, m);
    p.frame.topRows(m) = Eigen::MatrixXcd::Identity(m, m);
    p.frame.bottomRows(m) = H;
    return p;
  }
};

/// Max |omega(frame_i, frame_j)| over the tangent frame: zero iff the
/// tangent space is Lagrangean.
inline double lagrangean_deviation(const FundamentalData& fd, const ConePoint& p) {
  double worst = 0;
  int m = p.frame.cols();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      worst = std::max(worst, std::abs(fd.omega(p.frame.col(i), p.frame.col(j))));
  return worst;
}

/// Canonical metric of the cone at dF|_Z in the z-frame: 2 Im Hess F(Z),
/// asserted against the gamma-pullback through the lift frame.
inline Eigen::MatrixXcd cone_metric(const FundamentalData& fd, const BasicFunction& F,
                                    const Eigen::VectorXcd& Z, double tol = 1e-10) {
  Eigen::MatrixXcd H = F.hessian(Z);
  Eigen::MatrixXcd g = Cplx(0, -1) * (H - H.adjoint().eval());
  // 2 Im H as a Hermitian matrix: -i (H - H^*) since H is symmetric
  ConePoint p = ConePoint::at(F, Z);
  int m = F.nvars;
  Eigen::MatrixXcd pull(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) pull(i, j) = fd.gamma(p.frame.col(i), p.frame.col(j));
  double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
  if ((pull - g).cwiseAbs().maxCoeff() > tol * scale)
    throw RouteMismatchError("cone_metric: formula and gamma-pullback disagree");
  return g;
}

/// Hermitian form of the special metric on P(C) at the lift u:
/// (v, w) -> gamma(v,w)/gamma(u,u) - gamma(v,u) gamma(u,w) / gamma(u,u)^2.
inline Cplx special_metric_pair(const FundamentalData& fd, const Eigen::VectorXcd& u,
                                const Eigen::VectorXcd& v, const Eigen::VectorXcd& w) {
  Cplx guu = fd.gamma(u, u);
  if (std::abs(guu) < 1e-10 * u.squaredNorm())
    throw ImproperConeError("special_metric: gamma(u,u) ~ 0, cone not properly nondegenerate");
  return fd.gamma(v, w) / guu - fd.gamma(v, u) * fd.gamma(u, w) / (guu * guu);
}

inline double special_metric(const FundamentalData& fd, const Eigen::VectorXcd& u,
                             const Eigen::VectorXcd& v) {
  return special_metric_pair(fd, u, v, v).real();
}

/// Kaehler potential of the special metric in the inhomogeneous chart
/// zeta^0 = 1: K^F(zeta) = log gamma(lift, lift).
inline double special_potential(const FundamentalData& fd, const BasicFunction& F,
                                const Eigen::VectorXcd& zeta_full) {
  ConePoint p = ConePoint::at(F, zeta_full);
  double g = fd.gamma(p.lift, p.lift).real();
  if (!(g > 0)) throw DomainError("special_potential: gamma(u,u) <= 0");
  return std::log(g);
}

/// K^s(Z) = -(4/d) log( 2 Im( -H(Z,..,Z)(d-2) + H(Z,..,Z,Zbar) d ) ), the
/// pullback of K^F through the tube chart.
template <class F>
F potential_Ks_t(const HomoPoly& h, const std::vector<std::complex<F>>& Z) {
  using C = std::complex<F>;
  int d = h.degree();
  SymForm H = SymForm::polarize(h);
  std::vector<C> Zbar(Z);
  for (auto& c : Zbar) c = std::conj(c);
  C hzz = H.eval(std::vector<std::vector<C>>(d, Z));
  std::vector<std::vector<C>> mixed(d - 1, Z);
  mixed.push_back(Zbar);
  C hzzbar = H.eval(mixed);
  F arg = F(2) * (-hzz * C(F(d - 2)) + hzzbar * C(F(d))).imag();
  if (!(arg > 0)) throw DomainError("potential_Ks: argument of log is not positive");
  return F(-4) / F(d) * std::log(arg);
}

inline double potential_Ks(const HomoPoly& h, const std::vector<Cplx>& Z) {
  return potential_Ks_t<double>(h, Z);
}

/// Exact residual of the cubic lemma Im(-H(Z,Z,Z) + 3 H(Z,Z,Zbar)) = 4 h(Y):
/// returns the exact difference (zero iff the lemma holds on this input).
inline Scalar lemma_4h_residual(const HomoPoly& h, const ExactVec& X, const ExactVec& Y) {
  if (h.degree() != 3) throw DomainError("lemma_4h: h must be cubic");
  SymForm H = SymForm::polarize(h);
  std::vector<CScalar> Z, Zbar;
  for (size_t i = 0; i < X.size(); ++i) {
    Z.emplace_back(X[i], Y[i]);
    Zbar.emplace_back(X[i], -Y[i]);
  }
  CScalar hzzz = H.eval(std::vector<std::vector<CScalar>>(3, Z));
  std::vector<std::vector<CScalar>> mixed{Z, Z, Zbar};
  CScalar hzzbar = H.eval(mixed);
  CScalar expr = CScalar(Scalar(-1)) * hzzz + CScalar(Scalar(3)) * hzzbar;
  Scalar four_hY = Scalar(4) * h.eval(Y);
  return expr.im - four_hY;
}

/// Deviation data of Theorem gc = gs for a cubic h at one tube point:
/// the FD complex Hessians of K and K^s, and the potential difference
/// K^s - K (which must be the constant -(4/3) log 8).
struct GcGsResult {
  double metric_deviation;   // relative, between the two FD Hessians
  double potential_shift;    // K^s - K at the point
};

// Both potentials are differenced in extended precision: K^s carries the
// additive -(4/3) log 8 and at the pinned step 1e-5 the double-precision
// rounding floor eps |K^s| / step^2 would exceed the 1e-6 comparison.
inline GcGsResult check_gc_equals_gs(const HomoPoly& h, const TubePoint& z,
                                     double step = 1e-5) {
  if (h.degree() != 3) throw DomainError("check_gc_equals_gs: theorem is cubic-only");
  int n = h.n();
  RealFnL K = [&](const std::vector<long double>& xy) {
    std::vector<long double> y(xy.begin() + n, xy.end());
    long double v = h.eval(y);
    if (!(v > 0)) throw ConeExitError("check_gc_equals_gs: h(Y) <= 0");
    return -4.0L / 3 * logl(v);
  };
  RealFnL Ks = [&](const std::vector<long double>& xy) {
    std::vector<std::complex<long double>> Z(n);
    for (int i = 0; i < n; ++i) Z[i] = std::complex<long double>(xy[i], xy[n + i]);
    return potential_Ks_t<long double>(h, Z);
  };
  auto chart = z.chart();
  long double lstep = static_cast<long double>(step);
  Eigen::MatrixXcd a = fd_complex_hessian_l(K, chart, lstep);
  Eigen::MatrixXcd b = fd_complex_hessian_l(Ks, chart, lstep);
  double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  std::vector<long double> lchart(chart.begin(), chart.end());
  return {(a - b).cwiseAbs().maxCoeff() / scale,
          static_cast<double>(Ks(lchart) - K(lchart))};
}

} // namespace specgeo
