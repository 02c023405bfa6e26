#include <catch2/catch_amalgamated.hpp>

#include "specgeo/sampling.hpp"
#include "specgeo/tube.hpp"

using namespace specgeo;
using Catch::Approx;

TEST_CASE("tube metric of x1 x2 at Y = (1,1)") {
  HomoPoly h = parse_poly("x1*x2", 2);
  Eigen::MatrixXd g = tube_metric_block(h, {1.0, 1.0});
  REQUIRE(g.isApprox(0.5 * Eigen::MatrixXd::Identity(2, 2), 1e-14));
  auto z = TubePoint::at(h, {0.3, -0.7}, {1.0, 1.0});
  Eigen::MatrixXd full = tube_metric(h, z);
  REQUIRE(full.isApprox(0.5 * Eigen::MatrixXd::Identity(4, 4), 1e-14));
  REQUIRE_THROWS_AS(TubePoint::at(h, {0, 0}, {1.0, -1.0}), ConeExitError);
}

TEST_CASE("radial direction has unit length on the unit level set") {
  Rng rng(5);
  for (auto [text, n] : std::vector<std::pair<const char*, int>>{{"x1*x2", 2}, {"x1*x2*x3", 3}}) {
    HomoPoly h = parse_poly(text, n);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<double> y(h.n(), 1.0);
      for (auto& v : y) v += rng.next_double(-0.3, 0.3);
      y = project_to_level(h, y);
      Eigen::MatrixXd g = tube_metric_block(h, y);
      Eigen::VectorXd yv = Eigen::Map<Eigen::VectorXd>(y.data(), y.size());
      REQUIRE(yv.dot(g * yv) == Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("tube metric restricts to the canonical metric on iH") {
  HomoPoly h = parse_poly("x1*x2*x3", 3);
  std::vector<double> y{1.0, 1.0, 1.0};
  Eigen::MatrixXd g = tube_metric_block(h, y);
  auto frame = tangent_basis(h, y);
  auto cg = canonical_metric_gram(h, y, frame);
  for (size_t a = 0; a < frame.size(); ++a)
    for (size_t b = 0; b < frame.size(); ++b) {
      Eigen::VectorXd va = Eigen::Map<Eigen::VectorXd>(frame[a].data(), 3);
      Eigen::VectorXd vb = Eigen::Map<Eigen::VectorXd>(frame[b].data(), 3);
      REQUIRE(va.dot(g * vb) == Approx(cg[a][b]).margin(1e-10));
    }
}

TEST_CASE("finite-difference cross-check of the closed form") {
  Rng rng(61);
  HomoPoly h = parse_poly("x1*x2*x3", 3);
  auto pts = sample_tube_points(h, {1, 1, 1}, rng, 20);
  for (auto& z : pts) REQUIRE(tube_fd_crosscheck(h, z) < 1e-6);
}

TEST_CASE("translation leaves the potential unchanged") {
  HomoPoly h = parse_poly("x1*x2", 2);
  auto z = TubePoint::at(h, {0.2, 0.4}, {1.5, 0.8});
  auto tr = translation_map({3.0, -1.0});
  auto w = tr.apply(z);
  REQUIRE(tube_potential(h, w.y) == tube_potential(h, z.y));
  REQUIRE(w.x[0] == Approx(3.2));
  REQUIRE(w.x[1] == Approx(-0.6));
}

TEST_CASE("inversion fixes iH and is an involution") {
  HomoPoly h = parse_poly("x1*x2*x3", 3);
  auto inv = inversion_map(h);
  std::vector<double> onH = project_to_level(h, {1.3, 0.8, 1.1});
  auto z = TubePoint::at(h, {0, 0, 0}, onH);
  auto w = inv.apply(z);
  for (int i = 0; i < 3; ++i) REQUIRE(w.y[i] == Approx(onH[i]).epsilon(1e-13));

  Rng rng(67);
  auto pts = sample_tube_points(h, {1, 1, 1}, rng, 20);
  for (auto& p : pts) {
    auto q = inv.apply(inv.apply(p));
    for (int i = 0; i < 3; ++i) {
      REQUIRE(q.y[i] == Approx(p.y[i]).epsilon(1e-12));
      REQUIRE(q.x[i] == p.x[i]);
    }
  }
}

TEST_CASE("the four named maps are isometries") {
  Rng rng(71);
  for (auto [text, n] : std::vector<std::pair<const char*, int>>{
           {"x1*x2", 2}, {"x1*x2*x3", 3}, {"x1^3 - x1*x2^2", 2}}) {
    HomoPoly h = parse_poly(text, n);
    std::vector<double> seed(n, 1.0);
    if (std::string(text) == "x1^3 - x1*x2^2") seed = {2.0, 1.0};
    auto pts = sample_tube_points(h, seed, rng, 10);
    for (auto& map : isometry_candidates(h))
      REQUIRE(check_pullback_isometry(h, map, pts) < 1e-9);
  }
}

TEST_CASE("linear symmetries of h extend to tube isometries") {
  HomoPoly h = parse_poly("x1*x2*x3", 3);
  ExactMat P = exact_zero(3, 3);
  P[0][1] = P[1][2] = P[2][0] = Scalar(1);
  REQUIRE(h.compose_linear(P) == h); // A*h = h, exactly on monomials
  AffineMap A{to_eigen(P), Eigen::VectorXd::Zero(3), 1.0};
  Rng rng(73);
  auto pts = sample_tube_points(h, {1, 1, 1}, rng, 10);
  REQUIRE(check_pullback_isometry(h, A.as_tube_map("permutation"), pts) < 1e-9);
}

TEST_CASE("a non-symmetry is detected as a non-isometry") {
  // The unipotent shear does not preserve the cone structure of x1*x2.
  // (Note diag rescalings only multiply a monomial h by a constant, which
  // shifts the potential additively and IS an isometry.)
  HomoPoly h = parse_poly("x1*x2", 2);
  Eigen::MatrixXd S = Eigen::MatrixXd::Identity(2, 2);
  S(0, 1) = 1.0;
  AffineMap A{S, Eigen::VectorXd::Zero(2), 1.0};
  Rng rng(79);
  auto pts = sample_tube_points(h, {1, 1}, rng, 10);
  REQUIRE(check_pullback_isometry(h, A.as_tube_map("shear"), pts) > 0.1);

  // diag(2,1) rescales h by 2: still an isometry, reported as such
  Eigen::MatrixXd D = Eigen::MatrixXd::Identity(2, 2);
  D(0, 0) = 2.0;
  AffineMap B{D, Eigen::VectorXd::Zero(2), 1.0};
  REQUIRE(check_pullback_isometry(h, B.as_tube_map("diag(2,1)"), pts) < 1e-9);
}

TEST_CASE("inversion realizes the product flip (t,Y) -> (-t,Y)") {
  HomoPoly h = parse_poly("x1*x2*x3", 3);
  Rng rng(97);
  REQUIRE(check_product_flip(h, inversion_map(h), {1, 1, 1}, rng, 20) < 1e-12);
}

TEST_CASE("group law: composites of generators stay isometric") {
  HomoPoly h = parse_poly("x1*x2*x3", 3);
  ExactMat P = exact_zero(3, 3);
  P[0][1] = P[1][2] = P[2][0] = Scalar(1);
  Eigen::VectorXd t(3);
  t << 1.5, -0.5, 2.0;
  AffineMap scale{Eigen::MatrixXd::Identity(3, 3), Eigen::VectorXd::Zero(3), 2.0};
  AffineMap trans{Eigen::MatrixXd::Identity(3, 3), t, 1.0};
  AffineMap rot{to_eigen(P), Eigen::VectorXd::Zero(3), 1.0};
  AffineMap composite = rot.then(scale).then(trans); // trans(scale(rot(Z)))
  Rng rng(83);
  auto pts = sample_tube_points(h, {1, 1, 1}, rng, 10);
  REQUIRE(check_pullback_isometry(h, composite.as_tube_map("composite"), pts) < 1e-9);
}

TEST_CASE("cone is a Riemannian product R x H") {
  Rng rng(89);
  for (auto [text, n] : std::vector<std::pair<const char*, int>>{{"x1*x2", 2}, {"x1*x2*x3", 3}}) {
    HomoPoly h = parse_poly(text, n);
    std::vector<std::vector<double>> thetas;
    for (int i = 0; i < 5; ++i) {
      std::vector<double> th(n - 1);
      for (auto& v : th) v = rng.next_double(-0.2, 0.2);
      thetas.push_back(th);
    }
    REQUIRE(cone_product_check(h, std::vector<double>(n, 1.0), thetas, {1.0, -0.7}) < 1e-10);
  }
}

TEST_CASE("tube signature law: complex (k+1, l) means real (2k+2, 2l)") {
  struct Case { const char* text; int n; std::vector<double> seed; };
  for (auto& c : {Case{"x1*x2*x3", 3, {1, 1, 1}}, Case{"x1^2 - x2^2 - x3^2", 3, {1, 0, 0}},
                  Case{"x1^2 + x2^2 + x3^2", 3, {1, 0, 0}}}) {
    HomoPoly h = parse_poly(c.text, c.n);
    auto y = project_to_level(h, c.seed);
    auto cg = canonical_metric(h, y);
    auto z = TubePoint::at(h, std::vector<double>(c.n, 0.0), y);
    auto sig = float_signature(tube_metric(h, z));
    REQUIRE(sig.pos == 2 * cg.sig.pos + 2);
    REQUIRE(sig.neg == 2 * cg.sig.neg);
    REQUIRE(sig.null == 0);
  }
}
