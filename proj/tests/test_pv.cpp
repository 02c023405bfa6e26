#include <catch2/catch_amalgamated.hpp>

#include "specgeo/pv.hpp"
#include "specgeo/sampling.hpp"

using namespace specgeo;

namespace {

// Oracle: the S6-sum Pfaffian, literally sum over all 720 permutations.
Scalar pfaffian_s6_oracle(const ExactMat& A) {
  std::vector<int> perm{0, 1, 2, 3, 4, 5};
  Scalar total(0);
  do {
    int inv = 0;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        if (perm[i] > perm[j]) ++inv;
    Scalar term(inv % 2 ? -1 : 1);
    term *= A[perm[0]][perm[1]] * A[perm[2]][perm[3]] * A[perm[4]][perm[5]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

ExactMat random_skew6(Rng& rng) {
  ExactMat A = exact_zero(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      A[i][j] = Scalar(rng.small_rational());
      A[j][i] = -A[i][j];
    }
  return A;
}

ExactVec to_skew_coords(const ExactMat& A) {
  ExactVec v(15, Scalar(0));
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) v[skew_index(i, j)] = A[i][j];
  return v;
}

} // namespace

TEST_CASE("invariant exponents from root data") {
  auto r11 = invariant_exponents(RootData{{{1, 1}, {1, 1}}});
  REQUIRE(r11.exponents == std::vector<long>{1, 1});
  REQUIRE(r11.N == 1);
  REQUIRE(r11.degree == 2);
  REQUIRE(r11.h == parse_poly("x1*x2", 2));

  auto r12 = invariant_exponents(RootData{{{1, 1}, {2, 1}}});
  REQUIRE(r12.exponents == std::vector<long>{2, 1});
  REQUIRE(r12.degree == 3);
  REQUIRE(r12.h == parse_poly("x1^2*x2", 2));

  auto r13 = invariant_exponents(RootData{{{1, 1}, {3, 1}}});
  REQUIRE(r13.exponents == std::vector<long>{3, 1});
  REQUIRE(r13.degree == 4);

  // N > 1: mu^2 = (1, 2, 2) gives raw (4, 2, 2), N = 2, e = (2, 1, 1)
  auto r122 = invariant_exponents(RootData{{{1, 1}, {2, 1}, {2, 1}}});
  REQUIRE(r122.N == 2);
  REQUIRE(r122.exponents == std::vector<long>{2, 1, 1});
  REQUIRE(r122.degree == 4);
}

TEST_CASE("root normalization sorts and rescales") {
  RootData r = RootData::from_rationals({Rational(2), Rational(1)});
  REQUIRE(r.fractions == std::vector<std::pair<long, long>>{{1, 1}, {2, 1}});
  // a1 a2^2 and a1^2 a2 are the same normalized row
  RootData half = RootData::from_rationals({Rational(1), Rational(1, 2)});
  REQUIRE(half.fractions == r.fractions);
}

TEST_CASE("key-solution enumeration reproduces the rank-root-polynomial table") {
  auto rows = enumerate_key_solutions(3);
  REQUIRE(rows.size() == 3);
  REQUIRE(rows[0].degree == 2);
  REQUIRE(rows[0].rank == 2);
  REQUIRE(rows[0].mu2 == std::vector<std::pair<long, long>>{{1, 1}, {1, 1}});
  REQUIRE(rows[0].h == parse_poly("x1*x2", 2));
  REQUIRE(rows[1].degree == 3);
  REQUIRE(rows[1].rank == 2);
  REQUIRE(rows[1].mu2 == std::vector<std::pair<long, long>>{{1, 1}, {2, 1}});
  REQUIRE(rows[1].h == parse_poly("x1^2*x2", 2));
  REQUIRE(rows[2].degree == 3);
  REQUIRE(rows[2].rank == 3);
  REQUIRE(rows[2].mu2 == std::vector<std::pair<long, long>>{{1, 1}, {1, 1}, {1, 1}});
  REQUIRE(rows[2].h == parse_poly("x1*x2*x3", 3));

  REQUIRE(enumerate_key_solutions(2).size() == 1);
}

TEST_CASE("Pfaffian: S6 sum, matchings and the normalization ratio 48") {
  Rng rng(111);
  auto entries = catalog();
  const auto& pf = catalog_entry(entries, "pfaffian-V15");
  for (int trial = 0; trial < 10; ++trial) {
    ExactMat A = random_skew6(rng);
    Scalar comb = pfaffian_matchings(A);
    Scalar s6 = pfaffian_s6_oracle(A);
    REQUIRE(s6 == Scalar(48) * comb);
    REQUIRE(pf.invariant->eval(to_skew_coords(A)) == s6);
  }
  // J6 has combinatorial Pfaffian -1 (three crossings), S6 value -48
  ExactMat J6 = exact_zero(6, 6);
  for (int i = 0; i < 3; ++i) {
    J6[i][3 + i] = Scalar(1);
    J6[3 + i][i] = Scalar(-1);
  }
  REQUIRE(pfaffian_matchings(J6) == Scalar(-1));
  REQUIRE(pf.invariant->eval(to_skew_coords(J6)) == Scalar(-48));
}

TEST_CASE("so(k,l) generators annihilate the quadratic form") {
  for (auto [k, l] : std::vector<std::pair<int, int>>{{2, 2}, {1, 3}}) {
    int n = k + l;
    ExactMat Q = exact_zero(n, n);
    for (int i = 0; i < n; ++i) Q[i][i] = Scalar(i < k ? 1 : -1);
    for (auto& X : pvdetail::so_kl_basis(k, l)) {
      // X^T Q + Q X = 0
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          Scalar s(0);
          for (int c = 0; c < n; ++c) s += X[c][a] * Q[c][b] + Q[a][c] * X[c][b];
          REQUIRE(s.is_zero());
        }
    }
  }
}

TEST_CASE("catalog entries: frozen basic facts") {
  auto entries = catalog();
  const auto& v6 = catalog_entry(entries, "det3-sym-V6");
  REQUIRE(v6.invariant->eval(v6.ref_point) == Scalar(1)); // det(Id) = 1
  REQUIRE(v6.action.size() == 8);
  const auto& v9 = catalog_entry(entries, "det3-V9");
  REQUIRE(v9.invariant->eval(v9.ref_point) == Scalar(1));
  REQUIRE(v9.action.size() == 16);
  const auto& q12 = catalog_entry(entries, "q(1,2)");
  REQUIRE(q12.invariant->eval(q12.ref_point) == Scalar(1)); // q(e1) = 1
  REQUIRE_THROWS_AS(infinitesimal_invariance(catalog_entry(entries, "herm3-O-E6"), {}),
                    UnimplementedEntry);
}

TEST_CASE("infinitesimal invariance is exact on random samples") {
  Rng rng(117);
  for (auto& e : catalog()) {
    if (!e.implemented() || e.action.empty()) continue;
    std::vector<ExactVec> samples;
    for (int i = 0; i < 20; ++i) samples.push_back(random_exact_point(rng, e.dim));
    REQUIRE(infinitesimal_invariance(e, samples) <= 1e-12);
  }
}

TEST_CASE("matrix-calculus oracle: derivative of det under the action") {
  // d/dt det(e^{tX} S e^{tX^T}) |_0 = 2 tr(X) det(S) = 0 for traceless X,
  // checked by finite differences in double precision
  auto entries = catalog();
  const auto& v6 = catalog_entry(entries, "det3-sym-V6");
  Rng rng(119);
  std::vector<double> v;
  for (int i = 0; i < 6; ++i) v.push_back(rng.next_double(-1, 1));
  const HomoPoly& det = *v6.invariant;
  for (const ExactMat& X : v6.action) {
    Eigen::MatrixXd Xd = to_eigen(X);
    double step = 1e-6;
    Eigen::VectorXd vd = Eigen::Map<Eigen::VectorXd>(v.data(), 6);
    auto shift = [&](double t) {
      Eigen::VectorXd w = vd + t * (Xd * vd);
      return det.eval(std::vector<double>(w.data(), w.data() + 6));
    };
    double fd = (shift(step) - shift(-step)) / (2 * step);
    REQUIRE(std::abs(fd) < 1e-8);
  }
}

TEST_CASE("regularity at reference points and a hand Hessian") {
  auto entries = catalog();
  for (auto& e : entries) {
    if (!e.implemented()) continue;
    REQUIRE(regularity_check(e, e.ref_point));
  }
  // h = x1^2 x2 at (1,1): Hessian [[2,2],[2,0]], det = -4
  HomoPoly h = parse_poly("x1^2*x2", 2);
  auto hess = h.hessian_at(ExactVec{Scalar(1), Scalar(1)});
  REQUIRE(exact_det(hess) == Scalar(-4));
}

TEST_CASE("orbit dimensions at the reference points") {
  auto entries = catalog();
  struct Expect { const char* name; int rank; };
  for (auto& ex : {Expect{"det3-V9", 8}, Expect{"det3-sym-V6", 5}, Expect{"pfaffian-V15", 14},
                   Expect{"q(1,2)", 2}, Expect{"q(2,2)", 3}, Expect{"q(3,1)", 3},
                   Expect{"pff-AtJA", 7}}) {
    const auto& e = catalog_entry(entries, ex.name);
    auto dims = orbit_dimension(e, e.ref_point);
    INFO(ex.name);
    REQUIRE(dims.rank_g == ex.rank);
    REQUIRE(dims.rank_g == e.dim - 1);
    REQUIRE(dims.rank_g1 == e.dim); // prehomogeneous under the extended group
  }
}

TEST_CASE("diagonal torus on R^3: orbit rank 2") {
  CatalogEntry e;
  e.name = "torus";
  e.dim = 3;
  e.degree = 3;
  e.invariant = parse_poly("x1*x2*x3", 3);
  ExactMat t1 = exact_zero(3, 3), t2 = exact_zero(3, 3);
  t1[0][0] = Scalar(1);
  t1[1][1] = Scalar(-1);
  t2[1][1] = Scalar(1);
  t2[2][2] = Scalar(-1);
  e.action = {t1, t2};
  e.ref_point = {Scalar(1), Scalar(1), Scalar(1)};
  auto dims = orbit_dimension(e, e.ref_point);
  REQUIRE(dims.rank_g == 2);
  REQUIRE(dims.rank_g1 == 3);
  std::vector<ExactVec> samples{e.ref_point};
  REQUIRE(infinitesimal_invariance(e, samples) == 0.0);
}

TEST_CASE("Pff(A^T J A) is a split quadratic form for n = 2") {
  auto entries = catalog();
  const auto& e = catalog_entry(entries, "pff-AtJA");
  auto hess = e.invariant->hessian_at(ExactVec(8, Scalar(0)));
  REQUIRE(exact_signature(hess) == Signature{4, 4, 0});
}

TEST_CASE("monomial structure labels the three cubic cases") {
  auto entries = catalog();
  const auto& v9 = catalog_entry(entries, "det3-V9");
  std::vector<int> all9(9);
  std::iota(all9.begin(), all9.end(), 0);
  REQUIRE(monomial_structure(*v9.invariant, BlockStructure{{{"V", all9}}}) ==
          CubicCase::Irreducible);

  // h = x0 q(x1..x3): blocks (1, 3)
  HomoPoly lq = parse_poly("x1*x2^2 + x1*x3^2 - x1*x4^2", 4);
  REQUIRE(monomial_structure(lq, BlockStructure{{{"l", {0}}, {"q", {1, 2, 3}}}}) ==
          CubicCase::LinearTimesQuadric);

  HomoPoly xyz = parse_poly("x1*x2*x3", 3);
  REQUIRE(monomial_structure(xyz, BlockStructure{{{"a", {0}}, {"b", {1}}, {"c", {2}}}}) ==
          CubicCase::ThreeLines);

  // degenerate: a block of degree zero
  REQUIRE(monomial_structure(parse_poly("x1^3", 2), BlockStructure{{{"a", {0}}, {"b", {1}}}}) ==
          CubicCase::Violates);
  // mixed multidegrees: not a monomial of the decomposition
  HomoPoly mixed = parse_poly("x1^2*x2 + x1*x2^2", 2);
  REQUIRE(monomial_structure(mixed, BlockStructure{{{"a", {0}}, {"b", {1}}}}) ==
          CubicCase::Violates);
}
