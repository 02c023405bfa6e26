#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "specgeo/hypersurface.hpp"
#include "specgeo/jalgebra.hpp"
#include "specgeo/poly.hpp"

namespace specgeo {

/// JSON form of a polynomial:
/// {n, d, monomials: [{exp: [...], coeff: "p/q*sqrt(m)"}], base_point: [...]}
/// base_point (optional) is a point with h > 0 seeding the cone component.
inline nlohmann::json poly_to_json(const HomoPoly& h,
                                   const std::vector<std::string>& base_point = {}) {
  nlohmann::json monos = nlohmann::json::array();
  for (auto& [e, c] : h.monomials())
    monos.push_back(nlohmann::json{{"exp", e}, {"coeff", c.str()}});
  nlohmann::json out{{"n", h.n()}, {"d", h.degree()}, {"monomials", monos}};
  if (!base_point.empty()) out["base_point"] = base_point;
  return out;
}

struct PolyFile {
  HomoPoly h;
  std::vector<double> base_point; // empty when the file has none
};

inline PolyFile poly_from_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  int d = j.at("d").get<int>();
  HomoPoly h(n, d);
  for (auto& m : j.at("monomials")) {
    Exponents e = m.at("exp").get<Exponents>();
    h.add_term(std::move(e), Scalar::parse(m.at("coeff").get<std::string>()));
  }
  PolyFile out{std::move(h), {}};
  if (j.contains("base_point"))
    for (auto& v : j.at("base_point"))
      out.base_point.push_back(v.is_string()
                                   ? Scalar::parse(v.get<std::string>()).to_double()
                                   : v.get<double>());
  return out;
}

inline PolyFile load_poly(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open polynomial file: " + path);
  nlohmann::json j;
  in >> j;
  return poly_from_json(j);
}

inline void exact_mat_to_json(nlohmann::json& out, const ExactMat& m) {
  out = nlohmann::json::array();
  for (auto& row : m) {
    nlohmann::json r = nlohmann::json::array();
    for (auto& v : row) r.push_back(v.str());
    out.push_back(std::move(r));
  }
}

inline ExactMat exact_mat_from_json(const nlohmann::json& j) {
  ExactMat m;
  for (auto& row : j) {
    ExactVec r;
    for (auto& v : row) r.push_back(Scalar::parse(v.get<std::string>()));
    m.push_back(std::move(r));
  }
  return m;
}

/// psi file: {"gram_x23": [[..]], "gram_x12": [[..]], "gram_x13": [[..]],
///            "coeff": [ [ [..z..] per y ] per x ]} with exact string entries.
inline IsometricMap psi_from_json(const nlohmann::json& j) {
  IsometricMap m;
  m.gram_x = exact_mat_from_json(j.at("gram_x23"));
  m.gram_y = exact_mat_from_json(j.at("gram_x12"));
  m.gram_z = exact_mat_from_json(j.at("gram_x13"));
  for (auto& per_x : j.at("coeff")) {
    std::vector<ExactVec> row;
    for (auto& per_y : per_x) {
      ExactVec z;
      for (auto& v : per_y) z.push_back(Scalar::parse(v.get<std::string>()));
      row.push_back(std::move(z));
    }
    m.coeff.push_back(std::move(row));
  }
  if (m.coeff.empty()) m.coeff.assign(m.order(), {});
  for (auto& row : m.coeff)
    if (static_cast<int>(row.size()) != m.dim_y())
      throw DomainError("psi file: coeff array shape does not match the Gram dimensions");
  return m;
}

inline nlohmann::json psi_to_json(const IsometricMap& m) {
  nlohmann::json gx, gy, gz;
  exact_mat_to_json(gx, m.gram_x);
  exact_mat_to_json(gy, m.gram_y);
  exact_mat_to_json(gz, m.gram_z);
  nlohmann::json coeff = nlohmann::json::array();
  for (auto& per_x : m.coeff) {
    nlohmann::json row = nlohmann::json::array();
    for (auto& z : per_x) {
      nlohmann::json zz = nlohmann::json::array();
      for (auto& v : z) zz.push_back(v.str());
      row.push_back(std::move(zz));
    }
    coeff.push_back(std::move(row));
  }
  return nlohmann::json{
      {"gram_x23", gx}, {"gram_x12", gy}, {"gram_x13", gz}, {"coeff", coeff}};
}

inline IsometricMap load_psi(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open psi file: " + path);
  nlohmann::json j;
  in >> j;
  return psi_from_json(j);
}

/// Per-point report of the canonical metric at X0 on the level set:
/// the point, the tangent Gram matrix, its signature, and whether the three
/// computation routes agreed.
inline nlohmann::json hypersurface_point_report(const HomoPoly& h, const ExactVec& X0) {
  nlohmann::json point = nlohmann::json::array();
  for (auto& v : X0) point.push_back(v.str());
  bool routes_agree = true;
  nlohmann::json gram = nlohmann::json::array();
  nlohmann::json sig;
  try {
    auto m = canonical_metric(h, X0);
    exact_mat_to_json(gram, std::get<ExactMat>(m.gram));
    sig = nlohmann::json{{"pos", m.sig.pos}, {"neg", m.sig.neg}, {"null", m.sig.null}};
  } catch (const RouteMismatchError&) {
    routes_agree = false;
  }
  return nlohmann::json{
      {"point", point}, {"signature", sig}, {"gram", gram}, {"routes_agree", routes_agree}};
}

inline nlohmann::json hypersurface_point_report(const HomoPoly& h,
                                                const std::vector<double>& X0) {
  nlohmann::json point(X0);
  bool routes_agree = true;
  nlohmann::json gram = nlohmann::json::array(), sig;
  try {
    auto m = canonical_metric(h, X0);
    const auto& g = std::get<Eigen::MatrixXd>(m.gram);
    for (int i = 0; i < g.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int j = 0; j < g.cols(); ++j) row.push_back(g(i, j));
      gram.push_back(std::move(row));
    }
    sig = nlohmann::json{{"pos", m.sig.pos}, {"neg", m.sig.neg}, {"null", m.sig.null}};
  } catch (const RouteMismatchError&) {
    routes_agree = false;
  }
  return nlohmann::json{
      {"point", point}, {"signature", sig}, {"gram", gram}, {"routes_agree", routes_agree}};
}

/// Serializes a built algebra: dimensions, labels, Gram, J and the nonzero
/// structure constants, plus the invariant polynomial on Jb.
inline nlohmann::json algebra_to_json(const MetricLieAlgebra& L, const TypeIStructure& st,
                                      const HomoPoly& h) {
  nlohmann::json gram, J;
  exact_mat_to_json(gram, L.gram());
  exact_mat_to_json(J, L.J());
  nlohmann::json brackets = nlohmann::json::array();
  for (int i = 0; i < L.dim(); ++i)
    for (int j = i + 1; j < L.dim(); ++j) {
      const ExactVec& b = L.bracket(i, j);
      nlohmann::json terms = nlohmann::json::array();
      for (int k = 0; k < L.dim(); ++k)
        if (!b[k].is_zero()) terms.push_back(nlohmann::json{{"k", k}, {"c", b[k].str()}});
      if (!terms.empty())
        brackets.push_back(nlohmann::json{{"i", i}, {"j", j}, {"terms", terms}});
    }
  std::vector<std::string> mu;
  for (auto& m : st.mu) mu.push_back(m.str());
  return nlohmann::json{{"dim", L.dim()},
                        {"labels", L.labels()},
                        {"rank", st.rank},
                        {"mu", mu},
                        {"gram", gram},
                        {"J", J},
                        {"brackets", brackets},
                        {"h_on_Jb", poly_to_json(h)}};
}

} // namespace specgeo
