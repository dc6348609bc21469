#include <doctest.h>

#include <limits>
#include <random>

#include "sympow/errors.hpp"
#include "sympow/monomial.hpp"
#include "test_util.hpp"

using namespace sympow;

TEST_CASE("degree") {
  CHECK(Monomial{0, 0, 0}.degree() == 0);
  CHECK(Monomial{2, 2, 1, 1, 1}.degree() == 7);

  // x1^3 x2^4 x3^2 x4^3 x5^5 x6^3 x7^2 x8^2 over 111 variables
  std::vector<std::int64_t> exps(111, 0);
  const std::int64_t head[] = {3, 4, 2, 3, 5, 3, 2, 2};
  std::copy(std::begin(head), std::end(head), exps.begin());
  CHECK(Monomial(exps).degree() == 24);
}

TEST_CASE("vertex weight") {
  CHECK(vertex_weight(Monomial{1, 2, 1}, {1, 2}) == 3);
  CHECK(vertex_weight(Monomial{1, 2, 1}, {}) == 0);
  CHECK(vertex_weight(Monomial{2, 2, 1, 1, 1}, {1, 2, 4}) == 5);
  CHECK_THROWS_AS(vertex_weight(Monomial{1, 1}, {3}), InvalidArgument);
}

TEST_CASE("divisibility") {
  CHECK(divides(Monomial{0, 0, 0}, Monomial{5, 1, 2}));
  CHECK_FALSE(divides(Monomial{1, 1, 0}, Monomial{1, 0, 1}));
  CHECK(divides(Monomial{1, 1, 1, 1, 1}, Monomial{2, 2, 1, 1, 1}));
  CHECK_THROWS_AS(divides(Monomial{1}, Monomial{1, 2}), InvalidArgument);
}

TEST_CASE("weight additivity") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Monomial m = testutil::random_monomial(6, 5, rng);
    Monomial p = testutil::random_monomial(6, 5, rng);
    // disjoint index sets
    CHECK(vertex_weight(m, {1, 3}) + vertex_weight(m, {2, 6}) ==
          vertex_weight(m, {1, 2, 3, 6}));
    CHECK(vertex_weight(m.times(p), {1, 4, 5}) ==
          vertex_weight(m, {1, 4, 5}) + vertex_weight(p, {1, 4, 5}));
  }
}

TEST_CASE("divides is a partial order") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    Monomial a = testutil::random_monomial(5, 3, rng);
    Monomial b = testutil::random_monomial(5, 3, rng);
    Monomial c = testutil::random_monomial(5, 3, rng);
    CHECK(divides(a, a));
    if (divides(a, b) && divides(b, a)) CHECK(a == b);
    if (divides(a, b) && divides(b, c)) CHECK(divides(a, c));
  }
}

TEST_CASE("construction and product guards") {
  CHECK_THROWS_AS(Monomial({-1, 0}), InvalidArgument);
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(Monomial({big}).times(Monomial({1})), Overflow);
  CHECK(Monomial({2, 0}).times(Monomial({1, 3})) == Monomial{3, 3});
}

TEST_CASE("parsing") {
  CHECK(Monomial::parse("2,2,1,1,1", 5) == Monomial{2, 2, 1, 1, 1});
  CHECK(Monomial::parse("x1^2*x2^2*x3", 5) == Monomial{2, 2, 1, 0, 0});
  CHECK(Monomial::parse("x2", 3) == Monomial{0, 1, 0});
  CHECK(Monomial::parse("x1*x1^2", 2) == Monomial{3, 0});
  CHECK(Monomial::parse("1", 3) == Monomial::one(3));
  CHECK_THROWS_AS(Monomial::parse("1,2", 3), InvalidArgument);
  CHECK_THROWS_AS(Monomial::parse("x9", 3), InvalidArgument);
  CHECK_THROWS_AS(Monomial::parse("", 3), InvalidArgument);
  CHECK(Monomial{2, 2, 1, 0, 0}.str() == "x1^2*x2^2*x3");
  CHECK(Monomial::one(4).str() == "1");
}

TEST_CASE("deg-lex order") {
  CHECK(deg_lex_less(Monomial{1, 0}, Monomial{0, 2}));   // degree first
  CHECK(deg_lex_less(Monomial{0, 2}, Monomial{1, 1}));   // then lex
  CHECK_FALSE(deg_lex_less(Monomial{1, 1}, Monomial{1, 1}));
}
