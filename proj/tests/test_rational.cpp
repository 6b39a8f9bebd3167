#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wtap/rational.hpp"

using wtap::Rational;

TEST_CASE("rational normalizes sign and common factors") {
  const Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rational(0, 5) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse(" 2/6 ") == Rational(1, 3));
  CHECK(Rational::parse("-1/2") == Rational(-1, 2));
  CHECK(Rational::parse("2.75") == Rational(11, 4));
  CHECK(Rational::parse("1e-3") == Rational(1, 1000));
  CHECK(Rational::parse("0.1") == Rational(1, 10));
  CHECK(Rational::parse("1.5e2") == Rational(150));
  CHECK_THROWS(Rational::parse(""));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS(Rational::parse("1/x"));
}

TEST_CASE("rational arithmetic and ordering") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(b < a);
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(4).ceil() == 4);
  CHECK(Rational(2, 3).to_string() == "2/3");
  CHECK(Rational(5).to_string() == "5");
}

TEST_CASE("rational overflow is reported, not wrapped") {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
  CHECK_THROWS_AS(big + big, std::overflow_error);
  // Intermediate products beyond 64 bits are fine when the result fits.
  CHECK(big * Rational(1, 2) * Rational(2) == big);
}

TEST_CASE("dyadic bisection stays exact") {
  Rational lo(0), hi(1);
  for (int i = 0; i < 60; ++i) hi = (lo + hi) / Rational(2);
  CHECK(hi == Rational(1, std::int64_t{1} << 60));
}
