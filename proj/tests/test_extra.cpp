#include <catch2/catch_amalgamated.hpp>

#include "specgeo/cone.hpp"
#include "specgeo/jalgebra.hpp"
#include "specgeo/jalgebra_verify.hpp"
#include "specgeo/sampling.hpp"

using namespace specgeo;

TEST_CASE("hypersurface points carry annihilating tangent frames") {
  HomoPoly h = parse_poly("x1*x2*x3", 3);
  auto p = HypersurfacePoint::at(h, ExactVec{Scalar(1), Scalar(1), Scalar(1)});
  REQUIRE(p.tangent.size() == 2);
  auto grad = h.gradient_at(p.X0);
  for (auto& v : p.tangent) {
    Scalar pairing(0);
    for (size_t i = 0; i < v.size(); ++i) pairing += grad[i] * v[i];
    REQUIRE(pairing.is_zero());
  }
  REQUIRE_THROWS_AS(HypersurfacePoint::at(h, ExactVec{Scalar(2), Scalar(1), Scalar(1)}),
                    DomainError);
}

TEST_CASE("K^s domain guard and r-map preconditions") {
  HomoPoly h = parse_poly("x1*x2*x3", 3);
  // Y outside the cone: the Im(...) expression is negative
  std::vector<Cplx> bad{{0, -1}, {0, -1}, {0, -1}};
  REQUIRE_THROWS_AS(potential_Ks(h, bad), DomainError);
  REQUIRE_THROWS_AS(r_map(parse_poly("x1", 1)), DomainError);
}

TEST_CASE("rank-3 cubic has pure components (3,0), (1,2), (0,3) only") {
  auto [L, st, h] = build_u0_rank3(psi_division_algebra(4));
  std::vector<int> a_idx{0, 1, 2}, x_idx;
  for (int i = 3; i < h.n(); ++i) x_idx.push_back(i);
  auto parts = h.multidegree_split(BlockStructure{{{"a", a_idx}, {"X", x_idx}}});
  REQUIRE(parts.size() == 3);
  REQUIRE(parts.count({3, 0}) == 1);
  REQUIRE(parts.count({1, 2}) == 1);
  REQUIRE(parts.count({0, 3}) == 1);
  REQUIRE(parts.count({2, 1}) == 0); // the mixed component vanishes
}

TEST_CASE("ad restricted to a non-invariant subspace is rejected") {
  auto [L, st, h] = build_u0_rank2(1, 2);
  // [G2, x12-] lands in x12+, outside the x12- span
  ExactVec G2 = L.basis_vector(st.G[1]);
  REQUIRE_THROWS_AS(L.ad_restricted(G2, st.xminus.at({0, 1})), DomainError);
  // while Jb really is ad-invariant for every b0 direction
  for (const ExactVec& Y : st.b0_basis) REQUIRE_NOTHROW(L.ad_restricted(Y, st.Jb_indices));
}

TEST_CASE("scaling the algebra seed reproduces mu values in the field") {
  auto [L, st, h] = build_u0_rank2(0, 3);
  REQUIRE(st.mu[0] == Scalar(1));
  REQUIRE(st.mu[1] * st.mu[1] == Scalar(1, 3));
  REQUIRE(L.inner(st.B0, st.B0) == Scalar(4)); // 1 + s = d
}
