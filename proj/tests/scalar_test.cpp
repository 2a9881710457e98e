#include <doctest.h>

#include "fusion/scalar.hpp"

#include <cmath>

using namespace fusion;

TEST_CASE("field arithmetic in Q(sqrt 2)") {
  Scalar s = Scalar::sqrt2();
  CHECK(s * s == Scalar(2));
  CHECK(s * s * s == Scalar(2) * s);

  Scalar x(Rat(1, 2), Rat(1, 3)); // 1/2 + sqrt2/3
  Scalar y(Rat(-1), Rat(1, 6));
  CHECK(x + y == Scalar(Rat(-1, 2), Rat(1, 2)));
  CHECK(x - y == Scalar(Rat(3, 2), Rat(1, 6)));
  // (1/2 + s/3)(-1 + s/6) = -1/2 + 2/18 + s(1/12 - 1/3)
  CHECK(x * y == Scalar(Rat(-7, 18), Rat(-1, 4)));

  // division is exact: (x/y)*y == x
  CHECK(x / y * y == x);
  CHECK(Scalar(1) / s == Scalar(Rat(0), Rat(1, 2)));
  CHECK_THROWS_AS(x / Scalar(0), ScalarError);
}

TEST_CASE("exact sign and ordering") {
  // 1 - sqrt2 < 0, 3 - 2*sqrt2 > 0, 2 - sqrt2*sqrt2 == 0
  CHECK(Scalar(Rat(1), Rat(-1)).sign() == -1);
  CHECK(Scalar(Rat(3), Rat(-2)).sign() == 1);
  CHECK((Scalar(2) - Scalar::sqrt2() * Scalar::sqrt2()).sign() == 0);
  // near-tie that floats would get wrong: 665857 - 470832*sqrt2 > 0
  CHECK(Scalar(Rat(665857), Rat(-470832)).sign() == 1);
  CHECK(Scalar(Rat(-665857), Rat(470832)).sign() == -1);

  CHECK(Scalar::frac(1, 3) < Scalar::frac(1, 2));
  CHECK(Scalar::sqrt2() > Scalar(1));
  CHECK(abs(Scalar(Rat(1), Rat(-1))) == Scalar(Rat(-1), Rat(1)));
}

TEST_CASE("conversion helpers") {
  CHECK(Scalar::frac(3, 4).toDouble() == doctest::Approx(0.75));
  CHECK(Scalar::sqrt2().toDouble() == doctest::Approx(std::sqrt(2.0)));
  CHECK(Scalar(Rat(1, 4), Rat(1, 8)).toDouble() ==
        doctest::Approx(0.25 + std::sqrt(2.0) / 8));
  CHECK(!Scalar::sqrt2().isRational());
  CHECK(Scalar::frac(5, 7).isRational());
  CHECK(!Scalar(0).str().empty());
}

TEST_CASE("snap recovers small field elements") {
  auto s1 = Scalar::snap(0.25 + std::sqrt(2.0) / 8);
  REQUIRE(s1.has_value());
  CHECK(*s1 == Scalar(Rat(1, 4), Rat(1, 8)));

  auto s2 = Scalar::snap((2.0 - 1.0 / std::sqrt(2.0)) / 4.0);
  REQUIRE(s2.has_value());
  CHECK(*s2 == Scalar(Rat(1, 2), Rat(-1, 8)));

  auto s3 = Scalar::snap(0.0);
  REQUIRE(s3.has_value());
  CHECK(*s3 == Scalar(0));

  // value far from any admissible element must not snap
  CHECK(!Scalar::snap(0.123456789, 16, 1e-9).has_value());
  // round trip is within tolerance
  auto s4 = Scalar::snap(1.0 / 3.0);
  REQUIRE(s4.has_value());
  CHECK(std::abs(s4->toDouble() - 1.0 / 3.0) < 1e-9);
}
