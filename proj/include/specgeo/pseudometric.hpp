#pragma once

#include <string>
#include <variant>
#include <vector>

#include "specgeo/linalg.hpp"

namespace specgeo {

/// Symmetric bilinear form as a Gram matrix in a declared basis, carrying its
/// computed signature (pos, neg, null).  The exact representation keeps the
/// field element entries; the float one is used for sampled data.
struct PseudoMetric {
  std::vector<std::string> basis;
  std::variant<ExactMat, Eigen::MatrixXd> gram;
  Signature sig;

  static PseudoMetric from_exact(ExactMat g, std::vector<std::string> labels = {}) {
    PseudoMetric m;
    m.sig = exact_signature(g);
    m.gram = std::move(g);
    m.basis = std::move(labels);
    if (m.basis.empty())
      for (size_t i = 0; i < std::get<ExactMat>(m.gram).size(); ++i)
        m.basis.push_back("e" + std::to_string(i + 1));
    return m;
  }

  static PseudoMetric from_float(Eigen::MatrixXd g, std::vector<std::string> labels = {}) {
    PseudoMetric m;
    m.sig = float_signature(g);
    m.gram = std::move(g);
    m.basis = std::move(labels);
    if (m.basis.empty())
      for (int i = 0; i < std::get<Eigen::MatrixXd>(m.gram).rows(); ++i)
        m.basis.push_back("e" + std::to_string(i + 1));
    return m;
  }

  int dim() const {
    if (auto* e = std::get_if<ExactMat>(&gram)) return e->size();
    return std::get<Eigen::MatrixXd>(gram).rows();
  }
  bool is_exact() const { return std::holds_alternative<ExactMat>(gram); }
  bool nondegenerate() const { return sig.null == 0; }

  Eigen::MatrixXd gram_double() const {
    if (auto* e = std::get_if<ExactMat>(&gram)) return to_eigen(*e);
    return std::get<Eigen::MatrixXd>(gram);
  }
};

/// Signature of any symmetric matrix: exact counts from congruence
/// diagonalization for field entries, eigenvalue signs for float.
inline Signature signature(const ExactMat& m) { return exact_signature(m); }
inline Signature signature(const Eigen::MatrixXd& m) { return float_signature(m); }

} // namespace specgeo
