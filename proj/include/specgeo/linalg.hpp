#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "specgeo/scalar.hpp"

namespace specgeo {

using ExactMat = std::vector<std::vector<Scalar>>;
using ExactVec = std::vector<Scalar>;

inline ExactMat exact_zero(int rows, int cols) {
  return ExactMat(rows, ExactVec(cols, Scalar(0)));
}

inline ExactMat exact_identity(int n) {
  ExactMat m = exact_zero(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = Scalar(1);
  return m;
}

inline ExactMat exact_mul(const ExactMat& a, const ExactMat& b) {
  int r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
  ExactMat out = exact_zero(r, c);
  for (int i = 0; i < r; ++i)
    for (int l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (int j = 0; j < c; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

inline ExactVec exact_apply(const ExactMat& a, const ExactVec& x) {
  ExactVec out(a.size(), Scalar(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j)
      if (!a[i][j].is_zero()) out[i] += a[i][j] * x[j];
  return out;
}

inline Eigen::MatrixXd to_eigen(const ExactMat& m) {
  Eigen::MatrixXd out(m.size(), m.empty() ? 0 : m[0].size());
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) out(i, j) = m[i][j].to_double();
  return out;
}

/// Row echelon form by exact Gaussian elimination.  Returns the echelon
/// matrix and the pivot column of each nonzero row.
inline std::pair<ExactMat, std::vector<int>> exact_row_echelon(ExactMat m) {
  int rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) { sel = i; break; }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    Scalar inv = m[r][c].inverse();
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline int exact_rank(const ExactMat& m) { return exact_row_echelon(m).second.size(); }

/// Kernel basis of the row-space map x -> M x, columns ordered by free-pivot
/// index for determinism.
inline std::vector<ExactVec> exact_kernel(const ExactMat& m) {
  int cols = m.empty() ? 0 : m[0].size();
  auto [ech, pivots] = exact_row_echelon(m);
  std::vector<char> is_pivot(cols, 0);
  for (int p : pivots) is_pivot[p] = 1;
  std::vector<ExactVec> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    ExactVec v(cols, Scalar(0));
    v[f] = Scalar(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -ech[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves M x = b exactly; returns nullopt when the system is inconsistent.
/// Underdetermined systems return the solution with free variables at zero.
inline std::optional<ExactVec> exact_solve(const ExactMat& m, const ExactVec& b) {
  int rows = m.size(), cols = rows ? m[0].size() : 0;
  ExactMat aug = m;
  for (int i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  auto [ech, pivots] = exact_row_echelon(std::move(aug));
  for (size_t r = pivots.size(); r < static_cast<size_t>(rows); ++r)
    if (!ech[r][cols].is_zero()) return std::nullopt;
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  ExactVec x(cols, Scalar(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = ech[r][cols];
  return x;
}

inline Scalar exact_det(ExactMat m) {
  int n = m.size();
  Scalar det(1);
  for (int c = 0; c < n; ++c) {
    int sel = -1;
    for (int i = c; i < n; ++i)
      if (!m[i][c].is_zero()) { sel = i; break; }
    if (sel < 0) return Scalar(0);
    if (sel != c) { std::swap(m[c], m[sel]); det = -det; }
    det *= m[c][c];
    Scalar inv = m[c][c].inverse();
    for (int i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      Scalar f = m[i][c] * inv;
      for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

struct Signature {
  int pos = 0, neg = 0, null = 0;
  bool operator==(const Signature&) const = default;
};

/// Signature of an exact symmetric matrix by diagonalization under
/// congruence.  Zero-diagonal pivots with a nonzero off-diagonal partner are
/// resolved by the standard row/column addition trick.
inline Signature exact_signature(ExactMat m) {
  int n = m.size();
  Signature sig;
  // congruent transformations preserve symmetry; work in place
  for (int k = 0; k < n; ++k) {
    if (m[k][k].is_zero()) {
      int j = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m[k][i].is_zero()) { j = i; break; }
      if (j < 0) { sig.null += 1; continue; }
      // add row/col j into row/col k; new diagonal = 2 m[k][j] + m[j][j] != 0
      // unless m[j][j] = -2 m[k][j], in which case subtract instead
      Scalar newdiag = m[k][j] + m[k][j] + m[j][j];
      Scalar s = newdiag.is_zero() ? Scalar(-1) : Scalar(1);
      for (int c = 0; c < n; ++c) m[k][c] += s * m[j][c];
      for (int r = 0; r < n; ++r) m[r][k] += s * m[r][j];
    }
    Scalar pivot = m[k][k];
    if (pivot.is_zero()) { sig.null += 1; continue; }
    if (pivot.sign() > 0) sig.pos += 1; else sig.neg += 1;
    Scalar inv = pivot.inverse();
    for (int i = 0; i < n; ++i) {
      if (i == k || m[i][k].is_zero()) continue;
      Scalar f = m[i][k] * inv;
      for (int c = 0; c < n; ++c) m[i][c] -= f * m[k][c];
      for (int r = 0; r < n; ++r) m[r][i] -= f * m[r][k];
    }
  }
  return sig;
}

/// Signature of a float symmetric matrix; eigenvalues below
/// 1e-8 * spectral radius count as null.
inline Signature float_signature(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (m + m.transpose()));
  Signature sig;
  double radius = 0;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    radius = std::max(radius, std::abs(es.eigenvalues()[i]));
  double tol = 1e-8 * (radius > 0 ? radius : 1.0);
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    double ev = es.eigenvalues()[i];
    if (std::abs(ev) <= tol) sig.null += 1;
    else if (ev > 0) sig.pos += 1;
    else sig.neg += 1;
  }
  return sig;
}

/// Signature of a Hermitian complex matrix (same null rule).
inline Signature hermitian_signature(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (m + m.adjoint()));
  Signature sig;
  double radius = 0;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    radius = std::max(radius, std::abs(es.eigenvalues()[i]));
  double tol = 1e-8 * (radius > 0 ? radius : 1.0);
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    double ev = es.eigenvalues()[i];
    if (std::abs(ev) <= tol) sig.null += 1;
    else if (ev > 0) sig.pos += 1;
    else sig.neg += 1;
  }
  return sig;
}

} // namespace specgeo
