#include <catch2/catch_amalgamated.hpp>

#include <complex>

#include "specgeo/poly.hpp"
#include "specgeo/poly_power.hpp"
#include "specgeo/sampling.hpp"
#include "specgeo/symform.hpp"
#include "specgeo/hypersurface.hpp"

using namespace specgeo;
using Catch::Approx;

namespace {

// Independent polarization oracle: expand h(t1 v1 + ... + td vd) as an exact
// polynomial in the t's and read off the t1...td coefficient, divided by d!.
Scalar polarize_oracle(const HomoPoly& h, const std::vector<ExactVec>& vs) {
  int d = h.degree(), n = h.n();
  std::vector<HomoPoly> linear; // L_j(t) = sum_i t_i vs[i][j]
  for (int j = 0; j < n; ++j) {
    HomoPoly lj(d, 1);
    for (int i = 0; i < d; ++i) {
      Exponents e(d, 0);
      e[i] = 1;
      lj.add_term(std::move(e), vs[i][j]);
    }
    linear.push_back(std::move(lj));
  }
  HomoPoly expanded(d, d);
  for (auto& [e, c] : h.monomials()) {
    HomoPoly term = HomoPoly::monomial(d, Exponents(d, 0), c);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < e[j]; ++k) term = term * linear[j];
    expanded = expanded + term;
  }
  Rational dfact(1);
  for (int k = 2; k <= d; ++k) dfact *= k;
  return expanded.coeff(Exponents(d, 1)) * Scalar(Rational(1) / dfact);
}

ExactVec unit(int n, int i) {
  ExactVec v(n, Scalar(0));
  v[i] = Scalar(1);
  return v;
}

} // namespace

TEST_CASE("parse_poly reads the term grammar") {
  HomoPoly h = parse_poly("x1*x2*x3", 3);
  REQUIRE(h.degree() == 3);
  REQUIRE(h.monomials().size() == 1);
  REQUIRE(h.coeff({1, 1, 1}) == Scalar(1));

  HomoPoly g = parse_poly("x1^2*x2 - 1/2*x2*x3^2", 3);
  REQUIRE(g.degree() == 3);
  REQUIRE(g.monomials().size() == 2);
  REQUIRE(g.coeff({2, 1, 0}) == Scalar(1));
  REQUIRE(g.coeff({0, 1, 2}) == Scalar(-1, 2));

  HomoPoly s = parse_poly("1/2*sqrt(2)*x1^3", 1);
  REQUIRE(s.coeff({3}) == Scalar(1, 2) * Scalar::sqrt_of(2));
}

TEST_CASE("parse_poly rejects bad input") {
  REQUIRE_THROWS_AS(parse_poly("x1^2 + x1", 1), InhomogeneousError);
  REQUIRE_THROWS_AS(parse_poly("3/4", 2), DegreeZeroError);
  REQUIRE_THROWS_AS(parse_poly("x1 + ", 1), SyntaxError);
  REQUIRE_THROWS_AS(parse_poly("x5", 3), SyntaxError);
  REQUIRE_THROWS_AS(parse_poly("", 2), SyntaxError);
}

TEST_CASE("polarization: frozen values against the expansion oracle") {
  HomoPoly sq = parse_poly("x1^2", 1);
  SymForm Hsq = SymForm::polarize(sq);
  REQUIRE(Hsq.on_basis({0, 0}) == Scalar(1));

  HomoPoly h = parse_poly("x1*x2*x3", 3);
  SymForm H = SymForm::polarize(h);
  REQUIRE(H.on_basis({0, 1, 2}) == Scalar(1, 6));
  REQUIRE(H.on_basis({0, 0, 1}) == Scalar(0));
  REQUIRE(polarize_oracle(h, {unit(3, 0), unit(3, 1), unit(3, 2)}) == Scalar(1, 6));
  REQUIRE(polarize_oracle(h, {unit(3, 0), unit(3, 0), unit(3, 1)}) == Scalar(0));

  HomoPoly g = parse_poly("x1^2*x2", 2);
  SymForm G = SymForm::polarize(g);
  REQUIRE(G.on_basis({0, 0, 1}) == Scalar(1, 3));
  REQUIRE(polarize_oracle(g, {unit(2, 0), unit(2, 0), unit(2, 1)}) == Scalar(1, 3));
}

TEST_CASE("polarization matches the oracle on random arguments") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    int n = static_cast<int>(rng.next_int(1, 3));
    int d = static_cast<int>(rng.next_int(2, 4));
    HomoPoly h = random_poly(rng, n, d);
    SymForm H = SymForm::polarize(h);
    std::vector<ExactVec> args;
    for (int i = 0; i < d; ++i) args.push_back(random_exact_point(rng, n));
    REQUIRE(H.eval(args) == polarize_oracle(h, args));
  }
}

TEST_CASE("H(X,...,X) = h(X) exactly and eval is multilinear") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int n = static_cast<int>(rng.next_int(1, 4));
    int d = static_cast<int>(rng.next_int(1, 4));
    HomoPoly h = random_poly(rng, n, d);
    SymForm H = SymForm::polarize(h);
    ExactVec X = random_exact_point(rng, n);
    REQUIRE(H.eval(std::vector<ExactVec>(d, X)) == h.eval(X));

    if (d >= 2) {
      ExactVec Y = random_exact_point(rng, n);
      Scalar a(rng.small_rational()), b(rng.small_rational());
      ExactVec mix(n);
      for (int i = 0; i < n; ++i) mix[i] = a * X[i] + b * Y[i];
      std::vector<ExactVec> argsX(d, X), argsY(d, X), argsM(d, X);
      argsY[d - 1] = Y;
      argsM[d - 1] = mix;
      REQUIRE(H.eval(argsM) == a * H.eval(argsX) + b * H.eval(argsY));
    }
  }
}

TEST_CASE("homogeneity h(lambda X) = lambda^d h(X)") {
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    HomoPoly h = random_poly(rng, 3, 3);
    ExactVec X = random_exact_point(rng, 3);
    Scalar lam(rng.small_rational());
    ExactVec lX(3);
    for (int i = 0; i < 3; ++i) lX[i] = lam * X[i];
    REQUIRE(h.eval(lX) == lam.pow(3) * h.eval(X));
  }
}

TEST_CASE("complex evaluation of the polarization") {
  HomoPoly h = parse_poly("x1*x2*x3", 3);
  SymForm H = SymForm::polarize(h);
  using C = std::complex<double>;
  std::vector<C> Z{{0, 1}, {0, 1}, {0, 1}};
  C v = H.eval(std::vector<std::vector<C>>(3, Z));
  REQUIRE(v.real() == Approx(0.0).margin(1e-15));
  REQUIRE(v.imag() == Approx(-1.0));
}

TEST_CASE("hessian and log-hessian at points") {
  HomoPoly h = parse_poly("x1*x2*x3", 3);
  auto hess = hessian_metric(h, {Scalar(1), Scalar(1), Scalar(1)});
  const auto& m = std::get<ExactMat>(hess.gram);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) REQUIRE(m[i][j] == (i == j ? Scalar(0) : Scalar(1)));

  HomoPoly sq = parse_poly("x1^2", 1);
  auto hs = hessian_metric(sq, {Scalar(1)});
  REQUIRE(std::get<ExactMat>(hs.gram)[0][0] == Scalar(2));
  auto lh = log_hessian_metric(sq, {Scalar(1)});
  REQUIRE(std::get<ExactMat>(lh.gram)[0][0] == Scalar(-2));

  REQUIRE_THROWS_AS(log_hessian_metric(h, {Scalar(0), Scalar(1), Scalar(1)}), ZeroLevelError);
}

TEST_CASE("log-hessian identity holds exactly at random points") {
  Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    HomoPoly h = random_poly(rng, 3, 3);
    ExactVec X = random_exact_point(rng, 3);
    Scalar v = h.eval(X);
    if (v.is_zero()) continue;
    auto lh = std::get<ExactMat>(log_hessian_metric(h, X).gram);
    auto he = h.hessian_at(X);
    auto gr = h.gradient_at(X);
    Scalar vi = v.inverse();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        REQUIRE(lh[i][j] == he[i][j] * vi - gr[i] * gr[j] * vi * vi);
  }
}

TEST_CASE("multidegree split: components sum to h and are block-pure") {
  HomoPoly h = parse_poly("x1*x2 - 1/2*x3^2 - 1/2*x4^2", 4);
  BlockStructure B{{{"a", {0, 1}}, {"X", {2, 3}}}};
  auto parts = h.multidegree_split(B);
  REQUIRE(parts.size() == 2);
  REQUIRE(parts.at({2, 0}) == parse_poly("x1*x2", 4));
  REQUIRE(parts.at({0, 2}) == parse_poly("-1/2*x3^2 - 1/2*x4^2", 4));

  BlockStructure single{{{"all", {0, 1, 2, 3}}}};
  auto one = h.multidegree_split(single);
  REQUIRE(one.size() == 1);
  REQUIRE(one.at({2}) == h);

  Rng rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    HomoPoly g = random_poly(rng, 4, 3);
    auto ps = g.multidegree_split(B);
    HomoPoly sum(4, 3);
    for (auto& [key, comp] : ps) sum = sum + comp;
    REQUIRE(sum == g);
  }
}

TEST_CASE("exact pullback under a linear substitution") {
  HomoPoly h = parse_poly("x1*x2*x3", 3);
  // cyclic permutation fixes x1*x2*x3
  ExactMat A = exact_zero(3, 3);
  A[0][1] = A[1][2] = A[2][0] = Scalar(1);
  REQUIRE(h.compose_linear(A) == h);
  // diag(2,1,1) rescales
  ExactMat D = exact_identity(3);
  D[0][0] = Scalar(2);
  REQUIRE(h.compose_linear(D) == Scalar(2) * h);
}

TEST_CASE("perfect-power line heuristic") {
  REQUIRE(is_power_of_lower_degree(parse_poly("x1^2", 1)));
  REQUIRE(is_power_of_lower_degree(parse_poly("x1^2 + 2*x1*x2 + x2^2", 2)));
  REQUIRE(is_power_of_lower_degree(
      parse_poly("x1^3 + 3*x1^2*x2 + 3*x1*x2^2 + x2^3", 2))); // (x1+x2)^3
  REQUIRE_FALSE(is_power_of_lower_degree(parse_poly("x1*x2*x3", 3)));
  REQUIRE_FALSE(is_power_of_lower_degree(parse_poly("x1^2*x2", 2)));
  REQUIRE_FALSE(is_power_of_lower_degree(parse_poly("x1^2 - x2^2 - x3^2", 3)));
}
