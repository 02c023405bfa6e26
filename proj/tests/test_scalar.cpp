#include <catch2/catch_amalgamated.hpp>

#include "specgeo/rng.hpp"
#include "specgeo/scalar.hpp"

using namespace specgeo;

TEST_CASE("rational arithmetic and canonical zero") {
  Scalar a(1, 3), b(2, 3);
  REQUIRE(a + b == Scalar(1));
  REQUIRE((a - a).is_zero());
  REQUIRE(a * Scalar(3) == Scalar(1));
  REQUIRE(Scalar(7) / Scalar(2) == Scalar(7, 2));
}

TEST_CASE("radicals reduce eagerly") {
  Scalar r2 = Scalar::sqrt_of(2);
  REQUIRE(r2 * r2 == Scalar(2));
  REQUIRE(Scalar::sqrt_of(8) == Scalar(2) * r2);
  REQUIRE(Scalar::sqrt_of(12) == Scalar(2) * Scalar::sqrt_of(3));
  // sqrt(2)*sqrt(6) = 2*sqrt(3)
  REQUIRE(r2 * Scalar::sqrt_of(6) == Scalar(2) * Scalar::sqrt_of(3));
}

TEST_CASE("field closure under sums and products in a fixed tower") {
  Rng rng(41);
  Scalar r2 = Scalar::sqrt_of(2), r3 = Scalar::sqrt_of(3);
  for (int trial = 0; trial < 50; ++trial) {
    Scalar x = Scalar(rng.small_rational()) + Scalar(rng.small_rational()) * r2 +
               Scalar(rng.small_rational()) * r3;
    Scalar y = Scalar(rng.small_rational()) + Scalar(rng.small_rational()) * r2 * r3;
    for (const Scalar& v : {x + y, x * y, x - y}) {
      for (auto& [k, c] : v.terms()) REQUIRE((k == 1 || k == 2 || k == 3 || k == 6));
    }
  }
}

TEST_CASE("exact inverse across nested radicals") {
  Scalar r2 = Scalar::sqrt_of(2), r3 = Scalar::sqrt_of(3);
  Scalar x = Scalar(1) + r2;
  REQUIRE(x * x.inverse() == Scalar(1));
  // classic: 1/(1+sqrt(2)) = sqrt(2)-1
  REQUIRE(x.inverse() == r2 - Scalar(1));
  Scalar y = Scalar(3, 7) + Scalar(2) * r2 - Scalar(1, 2) * r3 + Scalar(5, 3) * r2 * r3;
  REQUIRE(y * y.inverse() == Scalar(1));
  Rng rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    Scalar z = Scalar(rng.small_rational()) + Scalar(rng.small_rational()) * r2 +
               Scalar(rng.small_rational()) * r3 + Scalar(rng.small_rational()) * r2 * r3;
    if (z.is_zero()) continue;
    REQUIRE(z * z.inverse() == Scalar(1));
  }
}

TEST_CASE("float conversion is total; signs resolve") {
  Scalar x = Scalar(1, 2) * Scalar::sqrt_of(2);
  REQUIRE(x.to_double() == Catch::Approx(std::sqrt(2.0) / 2));
  REQUIRE(x.sign() == 1);
  REQUIRE((-x).sign() == -1);
  REQUIRE(Scalar().sign() == 0);
  // sqrt(2) - 1 > 0, 1 - sqrt(2) < 0
  REQUIRE((Scalar::sqrt_of(2) - Scalar(1)).sign() == 1);
  REQUIRE((Scalar(1) - Scalar::sqrt_of(2)).sign() == -1);
}

TEST_CASE("scalar parsing round trips") {
  REQUIRE(Scalar::parse("1/2") == Scalar(1, 2));
  REQUIRE(Scalar::parse("-3/4*sqrt(2)") == Scalar(-3, 4) * Scalar::sqrt_of(2));
  REQUIRE(Scalar::parse("sqrt(5)") == Scalar::sqrt_of(5));
  REQUIRE(Scalar::parse("1 + 1/2*sqrt(2)") == Scalar(1) + Scalar(1, 2) * Scalar::sqrt_of(2));
  Scalar y = Scalar(3, 7) - Scalar(2, 5) * Scalar::sqrt_of(6);
  REQUIRE(Scalar::parse(y.str()) == y);
  REQUIRE_THROWS_AS(Scalar::parse("foo"), SyntaxError);
  REQUIRE_THROWS_AS(Scalar::parse("1/0"), SyntaxError);
}

TEST_CASE("complex exact ring") {
  CScalar i(Scalar(0), Scalar(1));
  CScalar z = i * i;
  REQUIRE(z == CScalar(Scalar(-1)));
  REQUIRE((i * i.conj()) == CScalar(Scalar(1)));
}

TEST_CASE("powers including negative exponents") {
  Scalar r2 = Scalar::sqrt_of(2);
  REQUIRE(r2.pow(2) == Scalar(2));
  REQUIRE(r2.pow(3) == Scalar(2) * r2);
  REQUIRE(r2.pow(-2) == Scalar(1, 2));
  REQUIRE(r2.pow(0) == Scalar(1));
}
