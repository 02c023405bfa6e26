#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace specgeo {

using RealFn = std::function<double(const std::vector<double>&)>;

/// Extended-precision variant used by the cross-check oracles: the larger
/// mantissa removes the eps |f| / step^2 rounding floor of second
/// differences at the standard step 1e-5.
using RealFnL = std::function<long double(const std::vector<long double>&)>;

inline Eigen::MatrixXd fd_hessian_l(const RealFnL& f, std::vector<long double> x,
                                    long double step = 1e-5L) {
  int n = x.size();
  Eigen::MatrixXd h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      long double xi = x[i], xj = x[j];
      auto at = [&](long double di, long double dj) {
        x[i] = xi + di;
        x[j] += dj;
        long double v = f(x);
        x[i] = xi;
        x[j] = xj;
        return v;
      };
      auto second = [&](long double s) {
        return (at(s, s) - at(s, -s) - at(-s, s) + at(-s, -s)) / (4 * s * s);
      };
      // one Richardson step removes the O(step^2) truncation term, which
      // dominates near the cone boundary where log h has large derivatives
      long double d1 = second(step), d2 = second(step / 2);
      h(i, j) = h(j, i) = static_cast<double>((4 * d2 - d1) / 3);
    }
  return h;
}

inline Eigen::MatrixXcd fd_complex_hessian_l(const RealFnL& f, const std::vector<double>& xy,
                                             long double step = 1e-5L) {
  int n = xy.size() / 2;
  std::vector<long double> x(xy.begin(), xy.end());
  Eigen::MatrixXd full = fd_hessian_l(f, std::move(x), step);
  Eigen::MatrixXcd h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double re = 0.25 * (full(i, j) + full(n + i, n + j));
      double im = 0.25 * (full(i, n + j) - full(n + i, j));
      h(i, j) = std::complex<double>(re, im);
    }
  return h;
}

inline std::vector<double> fd_gradient(const RealFn& f, std::vector<double> x,
                                       double step = 1e-5) {
  std::vector<double> g(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    double xi = x[i];
    x[i] = xi + step;
    double fp = f(x);
    x[i] = xi - step;
    double fm = f(x);
    x[i] = xi;
    g[i] = (fp - fm) / (2 * step);
  }
  return g;
}

inline Eigen::MatrixXd fd_hessian(const RealFn& f, std::vector<double> x, double step = 1e-5) {
  int n = x.size();
  Eigen::MatrixXd h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double xi = x[i], xj = x[j];
      auto at = [&](double di, double dj) {
        x[i] = xi + di;
        x[j] += dj; // handles i == j correctly: both offsets accumulate
        double v = f(x);
        x[i] = xi;
        x[j] = xj;
        return v;
      };
      double v = (at(step, step) - at(step, -step) - at(-step, step) + at(-step, -step)) /
                 (4 * step * step);
      h(i, j) = h(j, i) = v;
    }
  return h;
}

/// Wirtinger Hessian d^2/dz^i dzbar^j of a real function on C^n given in the
/// interleaved real chart (x_1..x_n, y_1..y_n), assembled from real central
/// differences:  1/4 [ (f_xx + f_yy) + i (f_xy - f_yx) ].
inline Eigen::MatrixXcd fd_complex_hessian(const RealFn& f, const std::vector<double>& xy,
                                           double step = 1e-5) {
  int n = xy.size() / 2;
  Eigen::MatrixXd full = fd_hessian(f, xy, step);
  Eigen::MatrixXcd h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double re = 0.25 * (full(i, j) + full(n + i, n + j));
      double im = 0.25 * (full(i, n + j) - full(n + i, j));
      h(i, j) = std::complex<double>(re, im);
    }
  return h;
}

using VecFn = std::function<std::vector<double>(const std::vector<double>&)>;

inline Eigen::MatrixXd fd_jacobian(const VecFn& f, std::vector<double> x, double step = 1e-6) {
  std::vector<double> f0 = f(x);
  Eigen::MatrixXd j(f0.size(), x.size());
  for (size_t c = 0; c < x.size(); ++c) {
    double xc = x[c];
    x[c] = xc + step;
    auto fp = f(x);
    x[c] = xc - step;
    auto fm = f(x);
    x[c] = xc;
    for (size_t r = 0; r < f0.size(); ++r) j(r, c) = (fp[r] - fm[r]) / (2 * step);
  }
  return j;
}

} // namespace specgeo
