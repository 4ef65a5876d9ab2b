#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tnfactor/radical.hpp"
#include "tnfactor/rational.hpp"

using namespace tnfactor;

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-3, 7) * Rational(7, 3) == Rational(-1));
  CHECK((Rational(-3, 7) * Rational(7, 3)).str() == "-1");
  CHECK(Rational(5, -10) == Rational(-1, 2)); // sign normalizes into the numerator
}

TEST_CASE("rational division by zero is an explicit error") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational(0).pow_int(-1), Error);
}

TEST_CASE("rational field laws hold on random values") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-60, 60), den(1, 60);
  for (int t = 0; t < 200; ++t) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!c.is_zero()) CHECK((a / c) * c == a);
  }
}

TEST_CASE("rational parsing accepts p/q and rejects everything else") {
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("+7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1.5"), Error);
  CHECK_THROWS_AS(Rational::parse(""), Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("1/-2"), Error);
  CHECK_THROWS_AS(Rational::parse("a/b"), Error);
}

TEST_CASE("string round trip is identity") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-500, 500), den(1, 500);
  for (int t = 0; t < 100; ++t) {
    Rational r(num(rng), den(rng));
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("to_double rounds to nearest") {
  CHECK(to_double(Rational(1, 2)) == 0.5);
  CHECK(to_double(Rational(-3, 4)) == -0.75);
  // 1/3 rounds to the binary64 nearest value, not a truncation.
  CHECK(to_double(Rational(1, 3)) == 1.0 / 3.0);

  SUBCASE("overflow is an error") {
    Rational huge = Rational(10).pow_int(400);
    CHECK_THROWS_AS(to_double(huge), Error);
  }

  SUBCASE("relative error at most 2^-52 on random rationals") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> num(1, 1000000), den(1, 1000000);
    const Rational ulp(1, 1L << 52);
    for (int t = 0; t < 200; ++t) {
      Rational x(num(rng), den(rng));
      Rational image = Rational::from_double(to_double(x));
      Rational rel_err = ((image - x) / x).abs();
      CHECK(rel_err <= ulp);
    }
  }
}

TEST_CASE("pow_int is exact for both signs") {
  CHECK(Rational(2, 3).pow_int(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow_int(-2) == Rational(9, 4));
  CHECK(Rational(5).pow_int(0) == Rational(1));
}

TEST_CASE("radical products with equal radicands resolve exactly") {
  // (1*sqrt(1/2)) * (3*sqrt(1/2)) = 3/2
  RadicalProduct p = radical_mul(Radical(Rational(1), Rational(1, 2)),
                                 Radical(Rational(3), Rational(1, 2)));
  REQUIRE(std::holds_alternative<Rational>(p));
  CHECK(std::get<Rational>(p) == Rational(3, 2));

  // (2*sqrt(3)) * (5*sqrt(3)) = 30
  p = radical_mul(Radical(Rational(2), Rational(3)), Radical(Rational(5), Rational(3)));
  REQUIRE(std::holds_alternative<Rational>(p));
  CHECK(std::get<Rational>(p) == Rational(30));
}

TEST_CASE("radical products with different radicands keep the product radicand") {
  RadicalProduct p = radical_mul(Radical(Rational(1), Rational(2)), Radical(Rational(1), Rational(3)));
  REQUIRE(std::holds_alternative<Radical>(p));
  CHECK(std::get<Radical>(p).coefficient() == Rational(1));
  CHECK(std::get<Radical>(p).radicand() == Rational(6));

  // sqrt(2) * sqrt(8) = sqrt(16) folds all the way to 4.
  p = radical_mul(Radical(Rational(1), Rational(2)), Radical(Rational(1), Rational(8)));
  REQUIRE(std::holds_alternative<Rational>(p));
  CHECK(std::get<Rational>(p) == Rational(4));
}

TEST_CASE("perfect-square radicands fold into the coefficient") {
  CHECK(Radical(Rational(1), Rational(4)).is_rational());
  CHECK(Radical(Rational(1), Rational(4)).as_rational() == Rational(2));
  CHECK(Radical(Rational(1), Rational(9, 4)).as_rational() == Rational(3, 2));
  CHECK(Radical(Rational(3), Rational(0)).is_zero());
  CHECK(Radical(Rational(0), Rational(7)).is_rational());
  CHECK_THROWS_AS(Radical(Rational(1), Rational(-2)), Error);
  // Non-square radicands are stored unsimplified.
  Radical r(Rational(1), Rational(8));
  CHECK(r.radicand() == Rational(8));
}

TEST_CASE("equal-radicand closure holds for random radicals") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> num(1, 40), den(1, 40);
  for (int t = 0; t < 200; ++t) {
    Rational d(num(rng), den(rng));
    Radical a(Rational(num(rng), den(rng)), d), b(Rational(num(rng), den(rng)), d);
    RadicalProduct p = radical_mul(a, b);
    REQUIRE(std::holds_alternative<Rational>(p));
    CHECK(std::get<Rational>(p) == a.coefficient() * b.coefficient() * a.radicand());
  }
}

TEST_CASE("radical serialization round trips") {
  Radical r(Rational(3, 2), Rational(2));
  CHECK(r.str() == "3/2*sqrt(2)");
  CHECK(Radical::parse("3/2*sqrt(2)") == r);
  CHECK(Radical::parse("sqrt(2)") == Radical(Rational(1), Rational(2)));
  CHECK(Radical::parse("5/3") == Radical::from_rational(Rational(5, 3)));
  CHECK(Radical::parse("-1/2*sqrt(7/5)").coefficient() == Rational(-1, 2));
  CHECK_THROWS_AS(Radical::parse("sqrt(2"), Error);
}

TEST_CASE("radical to_double goes through the float radicand") {
  CHECK(to_double(Radical(Rational(1), Rational(4))) == 2.0);
  CHECK(to_double(Radical(Rational(3, 2), Rational(2))) == doctest::Approx(2.1213203435596424));
}
