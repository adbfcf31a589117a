#include <doctest.h>

#include <stdexcept>

#include "pgl2q/rational.hpp"

using namespace pgl2q;

TEST_CASE("make_rational canonicalizes and rejects zero denominators") {
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(make_rational(1, -2) == make_rational(-1, 2));
  CHECK(make_rational(-6, -4) == make_rational(3, 2));
  CHECK(make_rational(0, 7) == 0);
  CHECK(make_rational(1, -2).get_den() == 2);
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("parse_rational accepts p and p/q") {
  CHECK(parse_rational("7/3") == make_rational(7, 3));
  CHECK(parse_rational("-2") == -2);
  CHECK(parse_rational("0") == 0);
  CHECK(parse_rational("-10/4") == make_rational(-5, 2));
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("binom follows the extended zero convention") {
  CHECK(binom(4, 2) == 6);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(8, 0) == 1);
  CHECK(binom(1, 3) == 0);
  CHECK(binom(5, -1) == 0);
  CHECK(binom(-2, 1) == 0);
  CHECK(binom(-2, -3) == 0);
  CHECK(binom(48, 24) == Int("32247603683100"));
}

TEST_CASE("binom satisfies Pascal's rule in range") {
  for (long a = 1; a <= 30; ++a)
    for (long b = 0; b <= a; ++b) CHECK(binom(a, b) == binom(a - 1, b - 1) + binom(a - 1, b));
}

TEST_CASE("rational arithmetic round-trips exactly") {
  for (int num = -9; num <= 9; ++num)
    for (int den = 1; den <= 7; ++den)
      for (int bn = 1; bn <= 5; ++bn) {
        const Rational a = make_rational(num, den);
        const Rational b = make_rational(bn, 3);
        CHECK((a / b) * b == a);
      }
}

TEST_CASE("to_string and is_integer") {
  CHECK(to_string(make_rational(3, 2)) == "3/2");
  CHECK(to_string(make_rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(is_integer(Rational(4)));
  CHECK(!is_integer(make_rational(1, 2)));
}
