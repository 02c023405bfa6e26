#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "specgeo/linalg.hpp"
#include "specgeo/poly.hpp"

namespace specgeo {

/// Metric Lie algebra: structure constants over the exact field, Gram matrix
/// of the scalar product, and a complex-structure matrix J.  Values are
/// immutable after construction in practice; brackets are stored densely as
/// coordinate vectors [e_i, e_j].
class MetricLieAlgebra {
public:
  MetricLieAlgebra(int dim, std::vector<std::string> labels)
      : dim_(dim), labels_(std::move(labels)),
        table_(dim * dim, ExactVec(dim, Scalar(0))), gram_(exact_identity(dim)),
        J_(exact_zero(dim, dim)) {}

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const ExactMat& gram() const { return gram_; }
  const ExactMat& J() const { return J_; }
  void set_gram(ExactMat g) { gram_ = std::move(g); }
  void set_J(ExactMat j) { J_ = std::move(j); }

  /// Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  void set_bracket(int i, int j, const ExactVec& v) {
    table_[i * dim_ + j] = v;
    ExactVec neg(dim_);
    for (int k = 0; k < dim_; ++k) neg[k] = -v[k];
    table_[j * dim_ + i] = std::move(neg);
  }

  /// Adds c * e_k into [e_i, e_j] (and the antisymmetric mirror).
  void add_bracket_term(int i, int j, int k, const Scalar& c) {
    table_[i * dim_ + j][k] += c;
    table_[j * dim_ + i][k] -= c;
  }

  const ExactVec& bracket(int i, int j) const { return table_[i * dim_ + j]; }

  ExactVec bracket(const ExactVec& u, const ExactVec& v) const {
    ExactVec out(dim_, Scalar(0));
    for (int i = 0; i < dim_; ++i) {
      if (u[i].is_zero()) continue;
      for (int j = 0; j < dim_; ++j) {
        if (v[j].is_zero()) continue;
        const ExactVec& b = bracket(i, j);
        Scalar f = u[i] * v[j];
        for (int k = 0; k < dim_; ++k)
          if (!b[k].is_zero()) out[k] += f * b[k];
      }
    }
    return out;
  }

  Scalar inner(const ExactVec& u, const ExactVec& v) const {
    Scalar s(0);
    for (int i = 0; i < dim_; ++i) {
      if (u[i].is_zero()) continue;
      for (int j = 0; j < dim_; ++j)
        if (!gram_[i][j].is_zero() && !v[j].is_zero()) s += u[i] * gram_[i][j] * v[j];
    }
    return s;
  }

  /// <u, e_k>, linear-time in the dimension.
  Scalar inner_basis(const ExactVec& u, int k) const {
    Scalar s(0);
    for (int i = 0; i < dim_; ++i)
      if (!u[i].is_zero() && !gram_[i][k].is_zero()) s += u[i] * gram_[i][k];
    return s;
  }

  ExactVec apply_J(const ExactVec& v) const { return exact_apply(J_, v); }

  ExactVec basis_vector(int i) const {
    ExactVec v(dim_, Scalar(0));
    v[i] = Scalar(1);
    return v;
  }

  /// Matrix of ad_u restricted to the coordinate subspace spanned by the
  /// given basis indices; throws if the image leaves that subspace.
  ExactMat ad_restricted(const ExactVec& u, const std::vector<int>& subspace) const {
    int m = subspace.size();
    std::vector<int> pos(dim_, -1);
    for (int r = 0; r < m; ++r) pos[subspace[r]] = r;
    ExactMat out = exact_zero(m, m);
    for (int c = 0; c < m; ++c) {
      ExactVec img = bracket(u, basis_vector(subspace[c]));
      for (int k = 0; k < dim_; ++k) {
        if (img[k].is_zero()) continue;
        if (pos[k] < 0)
          throw DomainError("ad_restricted: image leaves the declared subspace");
        out[pos[k]][c] = img[k];
      }
    }
    return out;
  }

private:
  int dim_;
  std::vector<std::string> labels_;
  std::vector<ExactVec> table_;
  ExactMat gram_;
  ExactMat J_;
};

/// Bilinear map psi: x x y -> z between pseudo-Euclidean spaces, stored as
/// Gram matrices and the coefficient array psi[a][b] in z-coordinates.
struct IsometricMap {
  ExactMat gram_x, gram_y, gram_z; // x23-, x12-, x13-
  std::vector<std::vector<ExactVec>> coeff; // coeff[a][b] in z

  int order() const { return gram_x.size(); }
  int dim_y() const { return gram_y.size(); }
  int dim_z() const { return gram_z.size(); }
  bool special() const { return dim_y() == dim_z(); }

  ExactVec apply(const ExactVec& X, const ExactVec& Y) const {
    ExactVec out(dim_z(), Scalar(0));
    for (int a = 0; a < order(); ++a) {
      if (X[a].is_zero()) continue;
      for (int b = 0; b < dim_y(); ++b) {
        if (Y[b].is_zero()) continue;
        Scalar f = X[a] * Y[b];
        for (int c = 0; c < dim_z(); ++c)
          if (!coeff[a][b][c].is_zero()) out[c] += f * coeff[a][b][c];
      }
    }
    return out;
  }

  /// The defining identity <psi(X,Y), psi(X,Y)> = <X,X><Y,Y> as an exact
  /// polynomial identity; returns the difference polynomial (zero iff
  /// isometric).  Variables are (x_1..x_k, y_1..y_p).
  HomoPoly isometry_defect() const {
    int k = order(), p = dim_y(), n = k + p;
    HomoPoly defect(n, 4);
    // <psi(X,Y), psi(X,Y)>
    for (int a = 0; a < k; ++a)
      for (int a2 = 0; a2 < k; ++a2)
        for (int b = 0; b < p; ++b)
          for (int b2 = 0; b2 < p; ++b2) {
            Scalar inner(0);
            for (int c = 0; c < dim_z(); ++c)
              for (int c2 = 0; c2 < dim_z(); ++c2)
                if (!coeff[a][b][c].is_zero() && !coeff[a2][b2][c2].is_zero() &&
                    !gram_z[c][c2].is_zero())
                  inner += coeff[a][b][c] * gram_z[c][c2] * coeff[a2][b2][c2];
            if (inner.is_zero()) continue;
            Exponents e(n, 0);
            e[a] += 1;
            e[a2] += 1;
            e[k + b] += 1;
            e[k + b2] += 1;
            defect.add_term(std::move(e), inner);
          }
    // minus <X,X><Y,Y>
    for (int a = 0; a < k; ++a)
      for (int a2 = 0; a2 < k; ++a2) {
        if (gram_x[a][a2].is_zero()) continue;
        for (int b = 0; b < p; ++b)
          for (int b2 = 0; b2 < p; ++b2) {
            if (gram_y[b][b2].is_zero()) continue;
            Exponents e(n, 0);
            e[a] += 1;
            e[a2] += 1;
            e[k + b] += 1;
            e[k + b2] += 1;
            defect.add_term(std::move(e), -(gram_x[a][a2] * gram_y[b][b2]));
          }
      }
    return defect;
  }

  bool is_isometric() const { return isometry_defect().is_zero(); }

  /// Transpose psi^t: x x z -> y, defined by <psi^t(X,Z), Y> = <Z, psi(X,Y)>.
  IsometricMap transpose() const {
    IsometricMap t;
    t.gram_x = gram_x;
    t.gram_y = gram_z;
    t.gram_z = gram_y;
    t.coeff.assign(order(), std::vector<ExactVec>(dim_z(), ExactVec(dim_y(), Scalar(0))));
    for (int a = 0; a < order(); ++a)
      for (int c = 0; c < dim_z(); ++c) {
        ExactVec rhs(dim_y(), Scalar(0));
        for (int b = 0; b < dim_y(); ++b) {
          Scalar s(0); // <e_c, psi(e_a, e_b)>_z
          for (int c2 = 0; c2 < dim_z(); ++c2)
            if (!gram_z[c][c2].is_zero()) s += gram_z[c][c2] * coeff[a][b][c2];
          rhs[b] = s;
        }
        auto sol = exact_solve(gram_y, rhs);
        if (!sol) throw DegenerateMetricError("IsometricMap::transpose: gram_y singular");
        t.coeff[a][c] = *sol;
      }
    return t;
  }
};

inline ExactMat diag_signs(const std::vector<int>& signs) {
  ExactMat g = exact_zero(signs.size(), signs.size());
  for (size_t i = 0; i < signs.size(); ++i) g[i][i] = Scalar(signs[i]);
  return g;
}

inline IsometricMap psi_zero(int p, int q) {
  IsometricMap m;
  m.gram_x = exact_zero(0, 0);
  m.gram_y = exact_identity(p);
  m.gram_z = exact_identity(q);
  return m;
}

/// Multiplication of a normed division algebra R, C or H as an isometric map.
inline IsometricMap psi_division_algebra(int dim) {
  if (dim != 1 && dim != 2 && dim != 4)
    throw DomainError("psi_division_algebra: dim must be 1, 2 or 4");
  IsometricMap m;
  m.gram_x = exact_identity(dim);
  m.gram_y = exact_identity(dim);
  m.gram_z = exact_identity(dim);
  m.coeff.assign(dim, std::vector<ExactVec>(dim, ExactVec(dim, Scalar(0))));
  if (dim == 1) {
    m.coeff[0][0][0] = Scalar(1);
    return m;
  }
  if (dim == 2) { // complex multiplication in basis (1, i)
    auto set = [&](int a, int b, int c, long s) { m.coeff[a][b][c] = Scalar(s); };
    set(0, 0, 0, 1), set(0, 1, 1, 1);
    set(1, 0, 1, 1), set(1, 1, 0, -1);
    return m;
  }
  // quaternions in basis (1, i, j, k)
  static const int table[4][4][2] = {
      // (result index, sign) of e_a * e_b
      {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
      {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
      {{2, 1}, {3, -1}, {0, -1}, {1, 1}},
      {{3, 1}, {2, 1}, {1, -1}, {0, -1}},
  };
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) m.coeff[a][b][table[a][b][0]] = Scalar(table[a][b][1]);
  return m;
}

/// Isometric but non-special embedding R x R -> R^2 (order 1), the negative
/// control of the cubic classification.
inline IsometricMap psi_embedding() {
  IsometricMap m;
  m.gram_x = exact_identity(1);
  m.gram_y = exact_identity(1);
  m.gram_z = exact_identity(2);
  m.coeff.assign(1, std::vector<ExactVec>(1, ExactVec(2, Scalar(0))));
  m.coeff[0][0][0] = Scalar(1);
  return m;
}

/// Distinguished subspaces of a type-I normal J-algebra in the fixed basis
/// order H_1..H_l, G_1..G_l, x-_blocks, x+_blocks.
struct TypeIStructure {
  int rank = 0;
  std::vector<Scalar> mu;
  std::vector<int> H, G;
  std::map<std::pair<int, int>, std::vector<int>> xminus, xplus; // keyed by (i,j), i<j
  ExactVec B0;
  std::vector<int> b_indices, Jb_indices;
  std::vector<ExactVec> b0_basis;
};

namespace detail {

struct TypeISpec {
  std::vector<Scalar> mu;                        // roots, mu[0] normalized to 1
  std::map<std::pair<int, int>, int> block_dim;  // dim x-_{ij}
  std::map<std::pair<int, int>, ExactMat> block_gram;
  const IsometricMap* psi = nullptr;             // psi_123 when rank 3
};

/// Assembles the structure constants of Theorem-style type-I data: key
/// algebras, elementary actions, weight-space actions of later key algebras
/// and (rank 3) the psi brackets.
inline std::pair<MetricLieAlgebra, TypeIStructure> build_type1(const TypeISpec& spec) {
  int l = spec.mu.size();
  std::vector<std::string> labels;
  for (int i = 0; i < l; ++i) labels.push_back("H" + std::to_string(i + 1));
  for (int i = 0; i < l; ++i) labels.push_back("G" + std::to_string(i + 1));
  TypeIStructure st;
  st.rank = l;
  st.mu = spec.mu;
  for (int i = 0; i < l; ++i) st.H.push_back(i);
  for (int i = 0; i < l; ++i) st.G.push_back(l + i);
  int cursor = 2 * l;
  for (auto& [ij, p] : spec.block_dim) {
    std::vector<int> idx;
    for (int a = 0; a < p; ++a) {
      labels.push_back("x" + std::to_string(ij.first + 1) + std::to_string(ij.second + 1) +
                       "-_" + std::to_string(a + 1));
      idx.push_back(cursor++);
    }
    st.xminus[ij] = idx;
  }
  for (auto& [ij, p] : spec.block_dim) {
    std::vector<int> idx;
    for (int a = 0; a < p; ++a) {
      labels.push_back("x" + std::to_string(ij.first + 1) + std::to_string(ij.second + 1) +
                       "+_" + std::to_string(a + 1));
      idx.push_back(cursor++);
    }
    st.xplus[ij] = idx;
  }
  int dim = cursor;
  MetricLieAlgebra L(dim, labels);

  // Gram: identity on the f blocks, declared block Grams on x- and x+
  ExactMat gram = exact_identity(dim);
  for (auto& [ij, g] : spec.block_gram) {
    auto& xm = st.xminus.at(ij);
    auto& xp = st.xplus.at(ij);
    for (size_t a = 0; a < xm.size(); ++a)
      for (size_t b = 0; b < xm.size(); ++b) {
        gram[xm[a]][xm[b]] = g[a][b];
        gram[xp[a]][xp[b]] = g[a][b];
      }
  }
  L.set_gram(std::move(gram));

  // J: H_i -> G_i, x- -> x+ blockwise
  ExactMat J = exact_zero(dim, dim);
  for (int i = 0; i < l; ++i) {
    J[st.G[i]][st.H[i]] = Scalar(1);
    J[st.H[i]][st.G[i]] = Scalar(-1);
  }
  for (auto& [ij, xm] : st.xminus) {
    auto& xp = st.xplus.at(ij);
    for (size_t a = 0; a < xm.size(); ++a) {
      J[xp[a]][xm[a]] = Scalar(1);
      J[xm[a]][xp[a]] = Scalar(-1);
    }
  }
  L.set_J(std::move(J));

  // key algebras: [H_i, G_i] = mu_i G_i
  for (int i = 0; i < l; ++i) L.add_bracket_term(st.H[i], st.G[i], st.G[i], spec.mu[i]);

  Scalar half(1, 2);
  for (auto& [ij, xm] : st.xminus) {
    auto [i, j] = ij;
    auto& xp = st.xplus.at(ij);
    int p = xm.size();
    const ExactMat& g = spec.block_gram.at(ij);
    for (int a = 0; a < p; ++a) {
      // elementary action of f_i on its x-space: ad_{H_i} = (mu_i/2) Id
      L.add_bracket_term(st.H[i], xm[a], xm[a], spec.mu[i] * half);
      L.add_bracket_term(st.H[i], xp[a], xp[a], spec.mu[i] * half);
      // weight action of f_j: ad_{H_j}|x+- = +-(mu_j/2), ad_{G_j}|x- = -mu_j J
      L.add_bracket_term(st.H[j], xm[a], xm[a], -(spec.mu[j] * half));
      L.add_bracket_term(st.H[j], xp[a], xp[a], spec.mu[j] * half);
      L.add_bracket_term(st.G[j], xm[a], xp[a], -spec.mu[j]);
      // heisenberg bracket inside x_i: [u, v] = mu_i <Ju, v> G_i
      for (int b = 0; b < p; ++b)
        if (!g[a][b].is_zero())
          L.add_bracket_term(xm[a], xp[b], st.G[i], spec.mu[i] * g[a][b]);
    }
  }

  if (spec.psi && spec.psi->order() > 0) {
    // rank-3 brackets through psi = psi_123 : x23- x x12- -> x13-
    const IsometricMap& psi = *spec.psi;
    auto& x23m = st.xminus.at({1, 2});
    auto& x23p = st.xplus.at({1, 2});
    auto& x12m = st.xminus.at({0, 1});
    auto& x12p = st.xplus.at({0, 1});
    auto& x13m = st.xminus.at({0, 2});
    auto& x13p = st.xplus.at({0, 2});
    Scalar inv_sqrt2 = Scalar(1) / Scalar::sqrt_of(2);
    // [X, Y] = (1/sqrt2) psi(X,Y), [JX, Y] = J [X, Y]
    for (int a = 0; a < psi.order(); ++a)
      for (int b = 0; b < psi.dim_y(); ++b)
        for (int c = 0; c < psi.dim_z(); ++c) {
          if (psi.coeff[a][b][c].is_zero()) continue;
          Scalar v = inv_sqrt2 * psi.coeff[a][b][c];
          L.add_bracket_term(x23m[a], x12m[b], x13m[c], v);
          L.add_bracket_term(x23p[a], x12m[b], x13p[c], v);
        }
    // [X, Y] in x23^{+-} x x13^{-+} -> x12+, via
    // <[X,Y], Z> = -(1/sqrt2) <JY, psi(X, JZ)> for X in x23-, Y in x13+,
    // and [JX, JY] = [X, Y].
    const ExactMat& g13 = psi.gram_z;
    const ExactMat& g12 = psi.gram_y;
    for (int a = 0; a < psi.order(); ++a)
      for (int b = 0; b < psi.dim_z(); ++b) { // Y = x13+_b, JY = -x13-_b
        ExactVec rhs(psi.dim_y(), Scalar(0));
        for (int c = 0; c < psi.dim_y(); ++c) { // Z = x12+_c, JZ = -x12-_c
          Scalar s(0); // <JY, psi(X, JZ)> = <-x13-_b, -psi(e_a, e_c)> = <e_b, psi(e_a,e_c)>
          for (int c2 = 0; c2 < psi.dim_z(); ++c2)
            if (!g13[b][c2].is_zero()) s += g13[b][c2] * psi.coeff[a][c][c2];
          rhs[c] = -(inv_sqrt2 * s);
        }
        auto comp = exact_solve(g12, rhs); // [X,Y] = sum comp_c x12+_c
        if (!comp) throw DegenerateMetricError("build_type1: x12 gram singular");
        for (int c = 0; c < psi.dim_y(); ++c) {
          if ((*comp)[c].is_zero()) continue;
          L.add_bracket_term(x23m[a], x13p[b], x12p[c], (*comp)[c]);
          // [JX, JY] = [X, Y] with JX = x23+_a, JY = -x13-_b
          L.add_bracket_term(x23p[a], x13m[b], x12p[c], -(*comp)[c]);
        }
      }
  }

  // B0 = sum (1/mu_i) H_i; b = span{H} + x-; Jb = span{G} + x+
  st.B0.assign(dim, Scalar(0));
  for (int i = 0; i < l; ++i) st.B0[st.H[i]] = spec.mu[i].inverse();
  st.b_indices = st.H;
  for (auto& [ij, xm] : st.xminus)
    st.b_indices.insert(st.b_indices.end(), xm.begin(), xm.end());
  st.Jb_indices = st.G;
  for (auto& [ij, xp] : st.xplus)
    st.Jb_indices.insert(st.Jb_indices.end(), xp.begin(), xp.end());
  // b0 = orthogonal complement of B0 in b: mu_i H_i - mu_{i+1} H_{i+1}, then x-
  for (int i = 0; i + 1 < l; ++i) {
    ExactVec v(dim, Scalar(0));
    v[st.H[i]] = spec.mu[i];
    v[st.H[i + 1]] = -spec.mu[i + 1];
    st.b0_basis.push_back(std::move(v));
  }
  for (auto& [ij, xm] : st.xminus)
    for (int idx : xm) st.b0_basis.push_back(L.basis_vector(idx));
  return {std::move(L), std::move(st)};
}

} // namespace detail

/// Elementary Kaehlerian Lie algebra e(n+1, mu): key algebra [H, G] = mu G
/// extended by a complex n-dimensional space with the Heisenberg bracket
/// [X, Y] = mu <JX, Y> G.  Basis order: H, G, X_1..X_n, JX_1..JX_n.
inline MetricLieAlgebra build_elementary(int n, const Scalar& mu) {
  int dim = 2 * n + 2;
  std::vector<std::string> labels{"H", "G"};
  for (int a = 1; a <= n; ++a) labels.push_back("X" + std::to_string(a));
  for (int a = 1; a <= n; ++a) labels.push_back("JX" + std::to_string(a));
  MetricLieAlgebra L(dim, labels);
  ExactMat J = exact_zero(dim, dim);
  J[1][0] = Scalar(1);
  J[0][1] = Scalar(-1);
  for (int a = 0; a < n; ++a) {
    J[2 + n + a][2 + a] = Scalar(1);
    J[2 + a][2 + n + a] = Scalar(-1);
  }
  L.set_J(std::move(J));
  Scalar half(1, 2);
  L.add_bracket_term(0, 1, 1, mu);
  for (int a = 0; a < n; ++a) {
    L.add_bracket_term(0, 2 + a, 2 + a, mu * half);
    L.add_bracket_term(0, 2 + n + a, 2 + n + a, mu * half);
    // [X_a, JX_a] = mu <JX_a, JX_a> G = mu G
    L.add_bracket_term(2 + a, 2 + n + a, 1, mu);
  }
  return L;
}

/// The rank-2 family u0(p, s) = e(p+1, 1) + e(1, 1/sqrt(s)) together with its
/// type-I markers and the invariant polynomial
/// h = a1 (mu a2)^s - (1/2)(mu a2)^{s-1} <X, X> on Jb, exact over Q(sqrt s).
/// flip_x builds the pseudo-Euclidean variant with the x1-block sign flipped.
inline std::tuple<MetricLieAlgebra, TypeIStructure, HomoPoly>
build_u0_rank2(int p, int s, bool flip_x = false) {
  if (s < 1) throw DomainError("build_u0_rank2: s must be >= 1");
  Scalar mu2 = Scalar(1) / Scalar::sqrt_of(s);
  detail::TypeISpec spec;
  spec.mu = {Scalar(1), mu2};
  spec.block_dim[{0, 1}] = p;
  spec.block_gram[{0, 1}] = diag_signs(std::vector<int>(p, flip_x ? -1 : 1));
  auto [L, st] = detail::build_type1(spec);

  int m = 2 + p; // coordinates (a1, a2, X) on Jb
  HomoPoly h(m, s + 1);
  // a1 (mu a2)^s
  {
    Exponents e(m, 0);
    e[0] = 1;
    e[1] = s;
    h.add_term(std::move(e), mu2.pow(s));
  }
  // -(1/2) (mu a2)^{s-1} <X, X>
  Scalar c = Scalar(-1, 2) * mu2.pow(s - 1);
  for (int a = 0; a < p; ++a) {
    Exponents e(m, 0);
    e[1] = s - 1;
    e[2 + a] = 2;
    h.add_term(std::move(e), c * (flip_x ? Scalar(-1) : Scalar(1)));
  }
  return {std::move(L), std::move(st), std::move(h)};
}

/// Rank-2 type-I algebra with an arbitrary root mu2 and no invariant
/// polynomial attached (used for the forbidden-extension check mu2 = sqrt 2).
inline std::pair<MetricLieAlgebra, TypeIStructure> build_rank2_general(int p,
                                                                       const Scalar& mu2) {
  detail::TypeISpec spec;
  spec.mu = {Scalar(1), mu2};
  spec.block_dim[{0, 1}] = p;
  spec.block_gram[{0, 1}] = exact_identity(p);
  return detail::build_type1(spec);
}

/// The rank-3 family u0(psi) = e1 + e2 + f3 (mu = (1,1,1)) determined by an
/// isometric map psi: x23- x x12- -> x13-, with the cubic
/// h = a1 a2 a3 - (1/2) sum a_alpha <X_bg, X_bg>
///     + (1/sqrt2) <psi(J X23, J X12), J X13>
/// on Jb.  Throws NotIsometricError when psi fails its defining identity;
/// `warning` reports the non-special case (no invariant cubic expected).
inline std::tuple<MetricLieAlgebra, TypeIStructure, HomoPoly>
build_u0_rank3(const IsometricMap& psi, std::string* warning = nullptr) {
  if (!psi.is_isometric())
    throw NotIsometricError("build_u0_rank3: psi violates <psi(X,Y),psi(X,Y)> = <X,X><Y,Y>");
  if (warning && psi.order() > 0 && !psi.special())
    *warning = "psi is neither special nor of order zero: no invariant cubic exists";

  int p12 = psi.dim_y(), p13 = psi.dim_z(), p23 = psi.order();
  detail::TypeISpec spec;
  spec.mu = {Scalar(1), Scalar(1), Scalar(1)};
  spec.block_dim[{0, 1}] = p12;
  spec.block_dim[{0, 2}] = p13;
  spec.block_dim[{1, 2}] = p23;
  spec.block_gram[{0, 1}] = psi.gram_y;
  spec.block_gram[{0, 2}] = psi.gram_z;
  spec.block_gram[{1, 2}] = psi.gram_x;
  spec.psi = &psi;
  auto [L, st] = detail::build_type1(spec);

  // coordinates on Jb: (a1, a2, a3, X12, X13, X23) in Jb_indices order
  int m = 3 + p12 + p13 + p23;
  int o12 = 3, o13 = 3 + p12, o23 = 3 + p12 + p13;
  HomoPoly h(m, 3);
  {
    Exponents e(m, 0);
    e[0] = e[1] = e[2] = 1;
    h.add_term(std::move(e), Scalar(1));
  }
  auto add_quad = [&](int a_idx, int offset, const ExactMat& g) {
    int dim = g.size();
    for (int u = 0; u < dim; ++u)
      for (int v = u; v < dim; ++v) {
        Scalar c = g[u][v];
        if (u != v) c += g[v][u];
        if (c.is_zero()) continue;
        Exponents e(m, 0);
        e[a_idx] = 1;
        e[offset + u] += 1;
        e[offset + v] += 1;
        h.add_term(std::move(e), Scalar(-1, 2) * c);
      }
  };
  add_quad(0, o23, psi.gram_x); // a1 <X23, X23>
  add_quad(1, o13, psi.gram_z); // a2 <X13, X13>
  add_quad(2, o12, psi.gram_y); // a3 <X12, X12>
  // (1/sqrt2) <psi(J X23, J X12), J X13>; J on x+ coordinates is -Id into x-,
  // so the two arguments contribute (+) and the third slot contributes (-).
  Scalar inv_sqrt2 = Scalar(1) / Scalar::sqrt_of(2);
  for (int a = 0; a < p23; ++a)
    for (int b = 0; b < p12; ++b)
      for (int c = 0; c < p13; ++c) {
        Scalar s(0); // <psi(e_a, e_b), e_c>_z
        for (int c2 = 0; c2 < p13; ++c2)
          if (!psi.gram_z[c2][c].is_zero()) s += psi.coeff[a][b][c2] * psi.gram_z[c2][c];
        if (s.is_zero()) continue;
        Exponents e(m, 0);
        e[o23 + a] += 1;
        e[o12 + b] += 1;
        e[o13 + c] += 1;
        h.add_term(std::move(e), -(inv_sqrt2 * s));
      }
  return {std::move(L), std::move(st), std::move(h)};
}

} // namespace specgeo
