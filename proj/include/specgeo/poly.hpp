#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "specgeo/scalar.hpp"

namespace specgeo {

using Exponents = std::vector<int>;

template <class R> struct ScalarCast;
template <> struct ScalarCast<Scalar> {
  static Scalar cast(const Scalar& s) { return s; }
};
template <> struct ScalarCast<double> {
  static double cast(const Scalar& s) { return s.to_double(); }
};
template <> struct ScalarCast<long double> {
  static long double cast(const Scalar& s) {
    long double v = 0;
    for (auto& [k, c] : s.terms())
      v += static_cast<long double>(c.get_num().get_d()) /
           static_cast<long double>(c.get_den().get_d()) * sqrtl(static_cast<long double>(k));
    return v;
  }
};
template <> struct ScalarCast<std::complex<long double>> {
  static std::complex<long double> cast(const Scalar& s) {
    return {ScalarCast<long double>::cast(s), 0.0L};
  }
};
template <> struct ScalarCast<std::complex<double>> {
  static std::complex<double> cast(const Scalar& s) { return {s.to_double(), 0.0}; }
};
template <> struct ScalarCast<CScalar> {
  static CScalar cast(const Scalar& s) { return CScalar(s); }
};

template <class R> R ring_pow(R base, int e) {
  R r = ScalarCast<R>::cast(Scalar(1));
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

/// Partition of the variable indices {0,...,n-1} into named blocks.
struct BlockStructure {
  std::vector<std::pair<std::string, std::vector<int>>> blocks;

  void validate(int n) const {
    std::vector<char> seen(n, 0);
    for (auto& [name, idx] : blocks)
      for (int i : idx) {
        if (i < 0 || i >= n || seen[i])
          throw DomainError("BlockStructure: blocks must partition the variables");
        seen[i] = 1;
      }
    for (char c : seen)
      if (!c) throw DomainError("BlockStructure: blocks must be exhaustive");
  }
};

/// Homogeneous polynomial of degree d in n variables with exact coefficients.
/// Monomials are keyed by exponent vectors in lexicographic order; zero
/// coefficients are never stored.
class HomoPoly {
public:
  HomoPoly() : n_(0), d_(0) {}
  HomoPoly(int n, int d) : n_(n), d_(d) {}

  static HomoPoly monomial(int n, Exponents exp, Scalar coeff) {
    int d = std::accumulate(exp.begin(), exp.end(), 0);
    HomoPoly h(n, d);
    h.add_term(std::move(exp), std::move(coeff));
    return h;
  }

  int n() const { return n_; }
  int degree() const { return d_; }
  bool is_zero() const { return mono_.empty(); }
  const std::map<Exponents, Scalar>& monomials() const { return mono_; }

  void add_term(Exponents exp, Scalar coeff) {
    if (static_cast<int>(exp.size()) != n_)
      throw DimensionMismatch("HomoPoly: exponent vector length != n");
    if (std::accumulate(exp.begin(), exp.end(), 0) != d_)
      throw InhomogeneousError("HomoPoly: term of total degree != d");
    if (coeff.is_zero()) return;
    auto it = mono_.find(exp);
    if (it == mono_.end()) mono_.emplace(std::move(exp), std::move(coeff));
    else {
      it->second += coeff;
      if (it->second.is_zero()) mono_.erase(it);
    }
  }

  Scalar coeff(const Exponents& exp) const {
    auto it = mono_.find(exp);
    return it == mono_.end() ? Scalar() : it->second;
  }

  template <class R> R eval(const std::vector<R>& x) const {
    if (static_cast<int>(x.size()) != n_)
      throw DimensionMismatch("HomoPoly::eval: point dimension != n");
    R total = ScalarCast<R>::cast(Scalar(0));
    for (auto& [exp, c] : mono_) {
      R term = ScalarCast<R>::cast(c);
      for (int i = 0; i < n_; ++i)
        if (exp[i]) term = term * ring_pow(x[i], exp[i]);
      total = total + term;
    }
    return total;
  }

  HomoPoly operator-() const {
    HomoPoly r(n_, d_);
    for (auto& [e, c] : mono_) r.mono_.emplace(e, -c);
    return r;
  }
  friend HomoPoly operator+(const HomoPoly& a, const HomoPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.n_ != b.n_ || a.d_ != b.d_)
      throw DimensionMismatch("HomoPoly: adding incompatible polynomials");
    HomoPoly r = a;
    for (auto& [e, c] : b.mono_) r.add_term(e, c);
    return r;
  }
  friend HomoPoly operator-(const HomoPoly& a, const HomoPoly& b) { return a + (-b); }
  friend HomoPoly operator*(const Scalar& c, const HomoPoly& a) {
    HomoPoly r(a.n_, a.d_);
    if (c.is_zero()) return r;
    for (auto& [e, k] : a.mono_) r.mono_.emplace(e, c * k);
    return r;
  }
  friend HomoPoly operator*(const HomoPoly& a, const HomoPoly& b) {
    if (a.n_ != b.n_) throw DimensionMismatch("HomoPoly: product over different variable sets");
    HomoPoly r(a.n_, a.d_ + b.d_);
    for (auto& [ea, ca] : a.mono_)
      for (auto& [eb, cb] : b.mono_) {
        Exponents e(a.n_);
        for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(std::move(e), ca * cb);
      }
    return r;
  }
  bool operator==(const HomoPoly& o) const {
    return n_ == o.n_ && mono_ == o.mono_ && (is_zero() || d_ == o.d_);
  }

  /// Exact partial derivative; degree drops by one (zero polynomial when d=1
  /// differentiates a missing variable away).
  HomoPoly derivative(int var) const {
    HomoPoly r(n_, d_ > 0 ? d_ - 1 : 0);
    for (auto& [e, c] : mono_) {
      if (e[var] == 0) continue;
      Exponents de = e;
      de[var] -= 1;
      r.add_term(std::move(de), Scalar(e[var]) * c);
    }
    return r;
  }

  template <class R> std::vector<R> gradient_at(const std::vector<R>& x) const {
    std::vector<R> g;
    g.reserve(n_);
    for (int i = 0; i < n_; ++i) g.push_back(derivative(i).eval(x));
    return g;
  }

  template <class R> std::vector<std::vector<R>> hessian_at(const std::vector<R>& x) const {
    std::vector<std::vector<R>> h(n_, std::vector<R>(n_, ScalarCast<R>::cast(Scalar(0))));
    for (int i = 0; i < n_; ++i) {
      HomoPoly di = derivative(i);
      for (int j = i; j < n_; ++j) h[i][j] = h[j][i] = di.derivative(j).eval(x);
    }
    return h;
  }

  /// Exact pullback (A*h)(X) = h(AX) under a linear map with exact entries.
  HomoPoly compose_linear(const std::vector<std::vector<Scalar>>& A) const {
    if (static_cast<int>(A.size()) != n_)
      throw DimensionMismatch("compose_linear: matrix must be n x n");
    std::vector<HomoPoly> rows; // row i of AX as a linear polynomial
    for (int i = 0; i < n_; ++i) {
      HomoPoly li(n_, 1);
      for (int j = 0; j < n_; ++j) {
        Exponents e(n_, 0);
        e[j] = 1;
        li.add_term(std::move(e), A[i][j]);
      }
      rows.push_back(std::move(li));
    }
    HomoPoly out(n_, d_);
    for (auto& [e, c] : mono_) {
      HomoPoly term = HomoPoly::monomial(n_, Exponents(n_, 0), c);
      for (int i = 0; i < n_; ++i)
        for (int k = 0; k < e[i]; ++k) term = term * rows[i];
      out = out + term;
    }
    return out;
  }

  /// Coefficients (low to high) of t -> h(P + tQ), exactly.
  std::vector<Scalar> restrict_affine_line(const std::vector<Scalar>& P,
                                           const std::vector<Scalar>& Q) const {
    std::vector<Scalar> out(d_ + 1, Scalar(0));
    // expand each monomial prod (P_i + t Q_i)^{e_i} by convolution
    for (auto& [e, c] : mono_) {
      std::vector<Scalar> acc{c};
      for (int i = 0; i < n_; ++i)
        for (int k = 0; k < e[i]; ++k) {
          std::vector<Scalar> next(acc.size() + 1, Scalar(0));
          for (size_t t = 0; t < acc.size(); ++t) {
            next[t] += acc[t] * P[i];
            next[t + 1] += acc[t] * Q[i];
          }
          acc = std::move(next);
        }
      for (size_t t = 0; t < acc.size(); ++t) out[t] += acc[t];
    }
    return out;
  }

  /// Splits h into its pure block-multidegree components; the map key is the
  /// vector of total degrees per block and the components sum to h.
  std::map<std::vector<int>, HomoPoly> multidegree_split(const BlockStructure& B) const {
    B.validate(n_);
    std::map<std::vector<int>, HomoPoly> parts;
    for (auto& [e, c] : mono_) {
      std::vector<int> key;
      key.reserve(B.blocks.size());
      for (auto& [name, idx] : B.blocks) {
        int deg = 0;
        for (int i : idx) deg += e[i];
        key.push_back(deg);
      }
      auto it = parts.find(key);
      if (it == parts.end()) it = parts.emplace(key, HomoPoly(n_, d_)).first;
      it->second.add_term(e, c);
    }
    return parts;
  }

private:
  int n_, d_;
  std::map<Exponents, Scalar> mono_;
};

/// Parses the polynomial grammar: terms `c * x<i>^e * ...` joined by + / -,
/// coefficients rational p/q optionally times sqrt(m).
inline HomoPoly parse_poly(const std::string& text, int n) {
  if (n < 1) throw DomainError("parse_poly: need at least one variable");
  size_t i = 0;
  struct Term { Scalar coeff; Exponents exp; };
  std::vector<Term> terms;
  while (true) {
    detail::skip_ws(text, i);
    if (i >= text.size()) break;
    int sign = 1;
    while (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      if (text[i] == '-') sign = -sign;
      ++i;
      detail::skip_ws(text, i);
    }
    Scalar coeff(1);
    Exponents exp(n, 0);
    bool saw_factor = false;
    while (true) {
      detail::skip_ws(text, i);
      Scalar numeric;
      if (detail::parse_numeric_factor(text, i, numeric)) {
        coeff *= numeric;
        saw_factor = true;
      } else if (i < text.size() && text[i] == 'x') {
        ++i;
        long var = detail::parse_uint(text, i);
        if (var < 1 || var > n)
          throw SyntaxError("variable x" + std::to_string(var) + " out of range 1.." +
                            std::to_string(n));
        int e = 1;
        detail::skip_ws(text, i);
        if (i < text.size() && text[i] == '^') {
          ++i;
          e = static_cast<int>(detail::parse_uint(text, i));
        }
        exp[var - 1] += e;
        saw_factor = true;
      } else {
        break;
      }
      detail::skip_ws(text, i);
      if (i < text.size() && text[i] == '*') { ++i; continue; }
      break;
    }
    if (!saw_factor)
      throw SyntaxError("expected term at position " + std::to_string(i) + " in '" + text + "'");
    terms.push_back({sign < 0 ? -coeff : coeff, std::move(exp)});
  }
  if (terms.empty()) throw SyntaxError("empty polynomial");

  int d = std::accumulate(terms[0].exp.begin(), terms[0].exp.end(), 0);
  for (auto& t : terms)
    if (std::accumulate(t.exp.begin(), t.exp.end(), 0) != d)
      throw InhomogeneousError("mixed total degrees in '" + text + "'");
  if (d == 0) throw DegreeZeroError("constant polynomial has no hypersurface");

  HomoPoly h(n, d);
  for (auto& t : terms) h.add_term(std::move(t.exp), std::move(t.coeff));
  return h;
}

inline std::string to_string(const HomoPoly& h) {
  if (h.is_zero()) return "0";
  std::string out;
  for (auto& [e, c] : h.monomials()) {
    Scalar coef = c;
    if (!out.empty() && c.str()[0] != '-') out += " + ";
    else if (!out.empty()) { out += " - "; coef = -c; }
    std::string vars;
    for (int i = 0; i < h.n(); ++i) {
      if (!e[i]) continue;
      if (!vars.empty()) vars += "*";
      vars += "x" + std::to_string(i + 1);
      if (e[i] > 1) vars += "^" + std::to_string(e[i]);
    }
    if (vars.empty()) out += coef.str();
    else if (coef == Scalar(1)) out += vars;
    else if (coef == Scalar(-1)) out += "-" + vars;
    else out += coef.str() + "*" + vars;
  }
  return out;
}

} // namespace specgeo
