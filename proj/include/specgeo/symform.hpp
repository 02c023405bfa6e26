#pragma once

#include <vector>

#include "specgeo/poly.hpp"

namespace specgeo {

/// Symmetric d-linear form H with H(X,...,X) = h(X).  Values are stored on
/// sorted index tuples (i1 <= ... <= id), which is the same data as an
/// exponent vector of total degree d.
class SymForm {
public:
  SymForm() : n_(0), d_(0) {}
  SymForm(int n, int d) : n_(n), d_(d) {}

  int n() const { return n_; }
  int degree() const { return d_; }
  const std::map<Exponents, Scalar>& values() const { return vals_; }

  /// Value on basis vectors (e_{t[0]}, ..., e_{t[d-1]}); the tuple need not
  /// be sorted (full symmetry).
  Scalar on_basis(std::vector<int> tuple) const {
    if (static_cast<int>(tuple.size()) != d_)
      throw DimensionMismatch("SymForm: tuple arity != d");
    Exponents e(n_, 0);
    for (int i : tuple) {
      if (i < 0 || i >= n_) throw DimensionMismatch("SymForm: index out of range");
      e[i] += 1;
    }
    auto it = vals_.find(e);
    return it == vals_.end() ? Scalar() : it->second;
  }

  /// Polarization of h by exponent-vector combinatorics:
  /// H(e_{i1},...,e_{id}) = coeff(alpha) * alpha! / d!  where alpha counts
  /// index multiplicities.  Exact.
  static SymForm polarize(const HomoPoly& h) {
    if (h.degree() < 1) throw DegreeZeroError("polarize: degree must be >= 1");
    SymForm H(h.n(), h.degree());
    Rational dfact(1);
    for (int k = 2; k <= h.degree(); ++k) dfact *= k;
    for (auto& [e, c] : h.monomials()) {
      Rational afact(1);
      for (int ei : e)
        for (int k = 2; k <= ei; ++k) afact *= k;
      H.vals_.emplace(e, Scalar(afact / dfact) * c);
    }
    return H;
  }

  /// The source polynomial h(X) = H(X,...,X).
  HomoPoly to_poly() const {
    HomoPoly h(n_, d_);
    Rational dfact(1);
    for (int k = 2; k <= d_; ++k) dfact *= k;
    for (auto& [e, v] : vals_) {
      Rational afact(1);
      for (int ei : e)
        for (int k = 2; k <= ei; ++k) afact *= k;
      h.add_term(e, Scalar(dfact / afact) * v);
    }
    return h;
  }

  /// Multilinear evaluation H(args[0], ..., args[d-1]) over any ring R that
  /// Scalar casts into.  Runs over all n^d index tuples; fine at desk scale.
  template <class R> R eval(const std::vector<std::vector<R>>& args) const {
    if (static_cast<int>(args.size()) != d_)
      throw DimensionMismatch("eval_sym: needs exactly d argument vectors");
    for (auto& a : args)
      if (static_cast<int>(a.size()) != n_)
        throw DimensionMismatch("eval_sym: argument vector of wrong dimension");
    R total = ScalarCast<R>::cast(Scalar(0));
    std::vector<int> tuple(d_, 0);
    while (true) {
      Exponents e(n_, 0);
      for (int i : tuple) e[i] += 1;
      auto it = vals_.find(e);
      if (it != vals_.end()) {
        R term = ScalarCast<R>::cast(it->second);
        for (int a = 0; a < d_; ++a) term = term * args[a][tuple[a]];
        total = total + term;
      }
      int pos = d_ - 1;
      while (pos >= 0 && tuple[pos] == n_ - 1) tuple[pos--] = 0;
      if (pos < 0) break;
      ++tuple[pos];
    }
    return total;
  }

  /// H(X,...,X,Y) with d-1 copies of X; the tangency pairing of the level set.
  template <class R> R eval_rep(const std::vector<R>& X, const std::vector<R>& Y) const {
    std::vector<std::vector<R>> args(d_ - 1, X);
    args.push_back(Y);
    return eval(args);
  }

  /// H(X,...,X,Y,Z) with d-2 copies of X.
  template <class R>
  R eval_rep2(const std::vector<R>& X, const std::vector<R>& Y, const std::vector<R>& Z) const {
    std::vector<std::vector<R>> args(d_ - 2, X);
    args.push_back(Y);
    args.push_back(Z);
    return eval(args);
  }

private:
  int n_, d_;
  std::map<Exponents, Scalar> vals_;
};

} // namespace specgeo
