#pragma once

#include <functional>
#include <string>
#include <vector>

#include "specgeo/fd.hpp"
#include "specgeo/hypersurface.hpp"
#include "specgeo/rng.hpp"

namespace specgeo {

/// Point Z = X + iY of the tube domain R^n + iV; Y must stay in the cone
/// (h(Y) > 0 on the seed component).
struct TubePoint {
  std::vector<double> x, y;

  static TubePoint at(const HomoPoly& h, std::vector<double> x, std::vector<double> y) {
    if (!(h.eval(y) > 0)) throw ConeExitError("TubePoint: h(Y) <= 0");
    return {std::move(x), std::move(y)};
  }
  std::vector<double> chart() const { // (x, y) concatenated
    std::vector<double> c = x;
    c.insert(c.end(), y.begin(), y.end());
    return c;
  }
};

/// Kaehler potential of the tube domain, K(Z) = -(4/d) log h(Y).
inline double tube_potential(const HomoPoly& h, const std::vector<double>& y) {
  double v = h.eval(y);
  if (!(v > 0)) throw ConeExitError("tube_potential: h(Y) <= 0");
  return -4.0 / h.degree() * std::log(v);
}

/// Hermitian coefficient block G = -(1/d) Hess_Y log h(Y), real symmetric.
inline Eigen::MatrixXd tube_metric_block(const HomoPoly& h, const std::vector<double>& y) {
  double v = h.eval(y);
  if (!(v > 0)) throw ConeExitError("tube_metric_block: h(Y) <= 0");
  int n = h.n(), d = h.degree();
  auto hess = h.hessian_at(y);
  auto grad = h.gradient_at(y);
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g(i, j) = -(hess[i][j] / v - grad[i] * grad[j] / (v * v)) / d;
  return g;
}

/// Full real 2n x 2n Gram of g^c in the chart (x, y): G plus a second copy of
/// G on the y-block.
inline Eigen::MatrixXd tube_metric(const HomoPoly& h, const TubePoint& z) {
  Eigen::MatrixXd g = tube_metric_block(h, z.y);
  int n = g.rows();
  Eigen::MatrixXd full = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  full.topLeftCorner(n, n) = g;
  full.bottomRightCorner(n, n) = g;
  return full;
}

/// Self-map of the tube domain with a closed-form real Jacobian.  Maps with
/// `cone_only` set are isometries of the totally geodesic cone iV (the
/// product R x H); their pullback check restricts to the y-block there.
struct TubeMap {
  std::string name;
  std::function<TubePoint(const TubePoint&)> apply;
  std::function<Eigen::MatrixXd(const TubePoint&)> jacobian; // 2n x 2n, chart (x,y)
  bool cone_only = false;
};

/// Affine element of the extended group: Z -> lambda (A Z) + t with A real
/// linear, t a real translation and lambda > 0.
struct AffineMap {
  Eigen::MatrixXd A;
  Eigen::VectorXd t;
  double lambda = 1.0;

  TubePoint operator()(const TubePoint& z) const {
    int n = A.rows();
    Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(z.x.data(), n);
    Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(z.y.data(), n);
    Eigen::VectorXd xm = lambda * (A * x) + t;
    Eigen::VectorXd ym = lambda * (A * y);
    return {std::vector<double>(xm.data(), xm.data() + n),
            std::vector<double>(ym.data(), ym.data() + n)};
  }

  AffineMap then(const AffineMap& outer) const {
    // outer(inner(Z)) = lambda_o lambda_i (A_o A_i) Z + (lambda_o A_o t_i + t_o)
    return {outer.A * A, outer.lambda * (outer.A * t) + outer.t, outer.lambda * lambda};
  }

  TubeMap as_tube_map(std::string name) const {
    AffineMap self = *this;
    int n = A.rows();
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    j.topLeftCorner(n, n) = lambda * A;
    j.bottomRightCorner(n, n) = lambda * A;
    return {std::move(name), [self](const TubePoint& z) { return self(z); },
            [j](const TubePoint&) { return j; }};
  }
};

inline TubeMap scaling_map(int n, double lambda) {
  return AffineMap{Eigen::MatrixXd::Identity(n, n), Eigen::VectorXd::Zero(n), lambda}
      .as_tube_map("scaling(" + std::to_string(lambda) + ")");
}

inline TubeMap translation_map(const std::vector<double>& x0) {
  int n = x0.size();
  return AffineMap{Eigen::MatrixXd::Identity(n, n),
                   Eigen::Map<const Eigen::VectorXd>(x0.data(), n), 1.0}
      .as_tube_map("translation");
}

inline TubeMap reflection_map(int n) {
  Eigen::MatrixXd j = Eigen::MatrixXd::Identity(2 * n, 2 * n);
  j.topLeftCorner(n, n) *= -1.0;
  return {"reflection",
          [](const TubePoint& z) {
            TubePoint w = z;
            for (auto& v : w.x) v = -v;
            return w;
          },
          [j](const TubePoint&) { return j; }};
}

/// Inversion with respect to iH: X + iY -> X + i Y / h(Y)^(2/d).  On the
/// cone iV this is the product-factor flip (t, Y) -> (-t, Y), an isometry of
/// (iV, g^c|iV); the displayed formula does not extend it isometrically to
/// the x-directions, so the map is marked cone_only.
inline TubeMap inversion_map(const HomoPoly& h) {
  int n = h.n(), d = h.degree();
  auto apply = [h, d](const TubePoint& z) {
    double v = h.eval(z.y);
    if (!(v > 0)) throw ConeExitError("inversion: h(Y) <= 0");
    double s = std::pow(v, -2.0 / d);
    TubePoint w = z;
    for (auto& y : w.y) y *= s;
    return w;
  };
  auto jac = [h, n, d](const TubePoint& z) {
    double v = h.eval(z.y);
    auto grad = h.gradient_at(z.y);
    double s = std::pow(v, -2.0 / d);
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
    // d/dY [ Y h^{-2/d} ] = h^{-2/d} ( I - (2/d) Y grad^T / h )
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = s * ((i == j ? 1.0 : 0.0) - 2.0 / d * z.y[i] * grad[j] / v);
    Eigen::MatrixXd full = Eigen::MatrixXd::Identity(2 * n, 2 * n);
    full.bottomRightCorner(n, n) = m;
    return full;
  };
  return {"inversion", std::move(apply), std::move(jac), /*cone_only=*/true};
}

/// The four global isometry families of the tube metric.
inline std::vector<TubeMap> isometry_candidates(const HomoPoly& h, double lambda = 2.0,
                                                std::vector<double> x0 = {}) {
  int n = h.n();
  if (x0.empty()) {
    x0.assign(n, 0.5);
    x0[0] = 3.0;
    if (n > 1) x0[1] = -1.0;
  }
  return {scaling_map(n, lambda), translation_map(x0), reflection_map(n), inversion_map(h)};
}

/// Max |(map* g^c) - g^c| over the given points, via the map's Jacobian.
/// Deviations are relative to the local metric scale.  Cone-only maps are
/// evaluated at the cone slice X = 0 and compared on the y-block, per their
/// domain of validity.
inline double check_pullback_isometry(const HomoPoly& h, const TubeMap& map,
                                      const std::vector<TubePoint>& points) {
  int n = h.n();
  double worst = 0;
  for (auto z : points) {
    if (map.cone_only) std::fill(z.x.begin(), z.x.end(), 0.0);
    Eigen::MatrixXd g = tube_metric(h, z);
    TubePoint w = map.apply(z);
    if (!(h.eval(w.y) > 0)) throw ConeExitError("check_pullback_isometry: image left the cone");
    Eigen::MatrixXd gw = tube_metric(h, w);
    Eigen::MatrixXd j = map.jacobian(z);
    Eigen::MatrixXd diff = j.transpose() * gw * j - g;
    if (map.cone_only) diff = diff.bottomRightCorner(n, n).eval();
    double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
    worst = std::max(worst, diff.cwiseAbs().maxCoeff() / scale);
  }
  return worst;
}

/// Checks that a cone-only map realizes (t, Y) -> (-t, Y) in the product
/// parametrization (t, Y) -> i e^t Y: applying it to i e^t Y must give
/// i e^{-t} Y.  Returns the max coordinate deviation.
inline double check_product_flip(const HomoPoly& h, const TubeMap& map,
                                 const std::vector<double>& seed, Rng& rng, int count) {
  auto y0 = project_to_level(h, seed);
  int n = h.n();
  double worst = 0;
  int done = 0, guard = 0;
  while (done < count && guard < 100 * count) {
    ++guard;
    std::vector<double> y = y0;
    for (auto& v : y) v += rng.next_double(-0.3, 0.3);
    if (!(h.eval(y) > 0)) continue;
    ++done;
    y = project_to_level(h, y);
    double t = rng.next_double(-1.0, 1.0);
    TubePoint z{std::vector<double>(n, 0.0), y};
    for (auto& v : z.y) v *= std::exp(t);
    TubePoint w = map.apply(z);
    for (int i = 0; i < n; ++i)
      worst = std::max(worst, std::abs(w.y[i] - std::exp(-t) * y[i]));
  }
  return worst;
}

/// Deviation of the cone pullback through (t, Y) -> i e^t Y from the product
/// metric dt^2 + g of R x H.  Reports the worst of: radial unit length,
/// radial/tangent orthogonality and t-independence of the tangent block.
inline double cone_product_check(const HomoPoly& h, const std::vector<double>& seed,
                                 const std::vector<std::vector<double>>& theta_samples,
                                 const std::vector<double>& t_samples) {
  int n = h.n(), d = h.degree();
  auto y0 = project_to_level(h, seed);
  auto frame = tangent_basis(h, y0);
  int m = frame.size();
  // Phi(t, theta) = e^t P(W), W = y0 + sum theta_a v_a, P = ray projection;
  // dPhi/dt = Phi,  dPhi/dtheta_a = e^t h(W)^{-1/d} (v_a - dh(v_a) W /(d h(W)))
  auto pullback = [&](double t, const std::vector<double>& theta) {
    std::vector<double> w = y0;
    for (int a = 0; a < m; ++a)
      for (int i = 0; i < n; ++i) w[i] += theta[a] * frame[a][i];
    double hw = h.eval(w);
    if (!(hw > 0)) throw ConeExitError("cone_product_check: left the seed component");
    auto grad = h.gradient_at(w);
    double et = std::exp(t), s = std::pow(hw, -1.0 / d);
    Eigen::MatrixXd dphi(n, m + 1);
    for (int i = 0; i < n; ++i) dphi(i, 0) = et * s * w[i];
    for (int a = 0; a < m; ++a) {
      double dh = 0;
      for (int i = 0; i < n; ++i) dh += grad[i] * frame[a][i];
      for (int i = 0; i < n; ++i)
        dphi(i, a + 1) = et * s * (frame[a][i] - dh * w[i] / (d * hw));
    }
    std::vector<double> phi(n);
    for (int i = 0; i < n; ++i) phi[i] = et * s * w[i];
    Eigen::MatrixXd g = tube_metric_block(h, phi);
    return Eigen::MatrixXd(dphi.transpose() * g * dphi);
  };
  double worst = 0;
  for (const auto& theta : theta_samples) {
    Eigen::MatrixXd p0 = pullback(0.0, theta);
    worst = std::max(worst, std::abs(p0(0, 0) - 1.0));
    for (int a = 1; a <= m; ++a) worst = std::max(worst, std::abs(p0(0, a)));
    for (double t : t_samples) {
      Eigen::MatrixXd pt = pullback(t, theta);
      worst = std::max(worst, std::abs(pt(0, 0) - 1.0));
      worst = std::max(worst,
                       (pt.bottomRightCorner(m, m) - p0.bottomRightCorner(m, m))
                           .cwiseAbs()
                           .maxCoeff());
    }
  }
  return worst;
}

/// Random tube points near the seed component: bounded real parts, imaginary
/// parts obtained by projecting perturbations of the seed back to the level
/// set and rescaling along the ray.
inline std::vector<TubePoint> sample_tube_points(const HomoPoly& h,
                                                 const std::vector<double>& seed, Rng& rng,
                                                 int count) {
  std::vector<TubePoint> out;
  auto base = project_to_level(h, seed);
  int n = h.n();
  int guard = 0;
  while (static_cast<int>(out.size()) < count && guard < 100 * count) {
    ++guard;
    std::vector<double> y = base;
    for (auto& v : y) v += rng.next_double(-0.35, 0.35);
    if (!(h.eval(y) > 0)) continue;
    y = project_to_level(h, y);
    double ray = std::exp(rng.next_double(-0.4, 0.4));
    for (auto& v : y) v *= ray;
    std::vector<double> x;
    for (int i = 0; i < n; ++i) x.push_back(rng.next_double(-2.0, 2.0));
    out.push_back(TubePoint{std::move(x), std::move(y)});
  }
  if (static_cast<int>(out.size()) < count)
    throw ConeExitError("sample_tube_points: could not stay on the seed component");
  return out;
}

/// Relative deviation between the closed-form Hermitian block and the
/// finite-difference complex Hessian of the potential.  The oracle runs in
/// extended precision so the pinned step 1e-5 stays above the rounding floor.
inline double tube_fd_crosscheck(const HomoPoly& h, const TubePoint& z, double step = 1e-5) {
  Eigen::MatrixXd g = tube_metric_block(h, z.y);
  int n = h.n(), d = h.degree();
  RealFnL K = [&](const std::vector<long double>& xy) {
    std::vector<long double> y(xy.begin() + n, xy.end());
    long double v = h.eval(y);
    if (!(v > 0)) throw ConeExitError("tube_fd_crosscheck: h(Y) <= 0");
    return -4.0L / d * logl(v);
  };
  Eigen::MatrixXcd fd = fd_complex_hessian_l(K, z.chart(), static_cast<long double>(step));
  double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
  return (fd - g.cast<std::complex<double>>()).cwiseAbs().maxCoeff() / scale;
}

} // namespace specgeo
