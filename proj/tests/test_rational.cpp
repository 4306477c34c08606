#include "doctest.h"
#include "medial/rational.hpp"

using medial::Rational;

TEST_CASE("rational canonical form") {
  const Rational r(mpz_class(6), mpz_class(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.to_string() == "-3/2");

  const Rational zero(mpz_class(0), mpz_class(7));
  CHECK(zero.is_zero());
  CHECK(zero.denominator() == 1);
  CHECK(zero.to_string() == "0");
  CHECK(Rational(5).is_integer());
  CHECK_FALSE(Rational(mpz_class(1), mpz_class(3)).is_integer());
}

TEST_CASE("rational parse") {
  CHECK(Rational::parse("1/3") == Rational(mpz_class(1), mpz_class(3)));
  CHECK(Rational::parse("-4/6").to_string() == "-2/3");
  CHECK(Rational::parse("+12") == Rational(12));
  CHECK(Rational::parse("123456789012345678901234567890").to_string() ==
        "123456789012345678901234567890");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("rational arithmetic") {
  const Rational third = Rational::parse("1/3");
  CHECK(Rational(9) * third == Rational(3));
  CHECK(Rational(9) * third.pow(3) - third == Rational(0));
  CHECK(third.pow(0) == Rational(1));
  CHECK((-third).pow(3) == Rational::parse("-1/27"));
  CHECK(third + third + third == Rational(1));
  CHECK(Rational(1) / Rational(-2) == Rational::parse("-1/2"));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(Rational::parse("-1/2") < third);
  CHECK(Rational::parse("-5/2").abs() == Rational::parse("5/2"));
}

TEST_CASE("rational exceeds fixed-width range exactly") {
  Rational big(1);
  for (int i = 0; i < 40; ++i) big *= Rational(1'000'000'007);
  CHECK(big / big == Rational(1));
  CHECK((big + Rational(1)) - big == Rational(1));
}
