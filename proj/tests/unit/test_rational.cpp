#include "doctest.h"
#include "oracles.hpp"

#include "rankbound/exact/rational.hpp"

#include <random>

using namespace rankbound::exact;

TEST_SUITE("rational") {
  TEST_CASE("parse and print round-trip") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-10/5")) == "-2");
    CHECK(to_string(parse_rational("0")) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
  }

  TEST_CASE("powers of two and floor/ceil") {
    CHECK(pow2(5) == 32);
    CHECK(pow2(-3) == make_rational(1, 8));
    CHECK(pow(make_rational(-2, 3), 3) == make_rational(-8, 27));
    CHECK(floor(make_rational(-7, 2)) == -4);
    CHECK(ceil(make_rational(-7, 2)) == -3);
    CHECK(ceil(make_rational(6, 3)) == 2);
  }

  TEST_CASE("one-sided square roots bracket the true root") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(0, 1000000), den(1, 1000000);
    for (int i = 0; i < 200; ++i) {
      const BigRational v = make_rational(num(rng), den(rng));
      const BigRational hi = sqrt_upper(v, 100);
      const BigRational lo = sqrt_lower(v, 100);
      CHECK(lo * lo <= v);
      CHECK(hi * hi >= v);
      CHECK(lo <= hi);
      CHECK(hi - lo <= hi * pow2(-98));
    }
    CHECK(sqrt_upper(make_rational(9, 4)) == make_rational(3, 2));
    CHECK(sqrt_lower(make_rational(9, 4)) == make_rational(3, 2));
  }

  TEST_CASE("decimal rendering rounds up with 30 significant digits") {
    CHECK(to_decimal_upper(make_rational(1, 3)) == "0.333333333333333333333333333334");
    CHECK(to_decimal_upper(make_rational(-1, 3)) == "-0.333333333333333333333333333333");
    CHECK(to_decimal_upper(make_rational(20)) == "20");
    CHECK(to_decimal_upper(make_rational(10485758)) == "10485758");
    CHECK(to_decimal_upper(make_rational(1, 8)) == "0.125");
    CHECK(to_decimal_upper(BigRational(0)) == "0");
  }

  TEST_CASE("decimal rendering is an upper bound within one unit of the last digit") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> num(-1000000000, 1000000000), den(1, 1000000);
    for (int i = 0; i < 200; ++i) {
      const BigRational v = make_rational(num(rng), den(rng));
      const std::string s = to_decimal_upper(v, 30);
      const oracle::Dec100 shown(s);
      const oracle::Dec100 exact = oracle::to_float<oracle::Dec100>(v);
      CHECK(shown >= exact);
      CHECK(shown - exact <= abs(exact) * oracle::Dec100("1e-29") + oracle::Dec100("1e-60"));
    }
  }
}
