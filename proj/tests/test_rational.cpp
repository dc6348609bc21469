#include <doctest.h>

#include "sympow/errors.hpp"
#include "sympow/rational.hpp"

using namespace sympow;

TEST_CASE("canonical form") {
  Rational q(BigInt(6), BigInt(-4));
  CHECK(q.num() == -3);
  CHECK(q.den() == 2);
  CHECK(Rational(BigInt(0), BigInt(7)) == Rational(0));
  CHECK(Rational(BigInt(0), BigInt(-7)).den() == 1);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), InvalidArgument);
}

TEST_CASE("arithmetic") {
  Rational a(BigInt(1), BigInt(3));
  Rational b(BigInt(1), BigInt(6));
  CHECK(a + b == Rational(BigInt(1), BigInt(2)));
  CHECK(a - b == b);
  CHECK(a * b == Rational(BigInt(1), BigInt(18)));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(BigInt(-1), BigInt(3)));
  CHECK_THROWS_AS(a / Rational(0), InvalidArgument);
}

TEST_CASE("ordering") {
  CHECK(Rational(BigInt(22), BigInt(21)) > Rational(1));
  CHECK(Rational(BigInt(-1), BigInt(2)) < Rational(0));
  CHECK(Rational(BigInt(35), BigInt(4)) >= Rational(BigInt(70), BigInt(8)));
}

TEST_CASE("printing and parsing") {
  CHECK(Rational(BigInt(35), BigInt(4)).str() == "35/4");
  CHECK(Rational(5).str() == "5");
  CHECK(Rational(BigInt(-3), BigInt(9)).str() == "-1/3");
  CHECK(Rational::parse("35/4") == Rational(BigInt(35), BigInt(4)));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("6/4") == Rational(BigInt(3), BigInt(2)));
  CHECK_THROWS_AS(Rational::parse("a/b"), InvalidArgument);
}
