#include "doctest.h"
#include "oracles.hpp"

#include "rankbound/exact/qsqrt2.hpp"

#include <random>

using namespace rankbound::exact;

TEST_SUITE("qsqrt2") {
  TEST_CASE("s0 and its identities") {
    const QSqrt2 s0 = QSqrt2::s0();
    CHECK(s0.sign() > 0);
    CHECK(s0 < QSqrt2(1));
    CHECK(s0 * s0 == QSqrt2(3) - QSqrt2(2) * QSqrt2::sqrt2());
    // 1/(2 - sqrt2) = 1 + 1/sqrt2
    CHECK(QSqrt2(1) / (QSqrt2(2) - QSqrt2::sqrt2()) == QSqrt2(1) + QSqrt2(1) / QSqrt2::sqrt2());
    CHECK(QSqrt2::sqrt2() * QSqrt2::sqrt2() == QSqrt2(2));
  }

  TEST_CASE("pow2_half") {
    CHECK(QSqrt2::pow2_half(4) == QSqrt2(4));
    CHECK(QSqrt2::pow2_half(3) == QSqrt2(BigRational(0), BigRational(2)));
    CHECK(QSqrt2::pow2_half(-1) == QSqrt2(BigRational(0), make_rational(1, 2)));
    CHECK(QSqrt2::pow2_half(-4) == QSqrt2(make_rational(1, 4)));
  }

  TEST_CASE("field operations") {
    const QSqrt2 x(make_rational(3, 7), make_rational(-5, 11));
    const QSqrt2 y(make_rational(-2), make_rational(1, 3));
    CHECK((x + y) - y == x);
    CHECK((x * y) / y == x);
    CHECK(x * x.inverse() == QSqrt2(1));
    CHECK(x.norm() == x.rational_part() * x.rational_part() - 2 * x.sqrt2_part() * x.sqrt2_part());
    CHECK_THROWS(QSqrt2(0).inverse());
  }

  TEST_CASE("text round-trip") {
    const QSqrt2 cases[] = {QSqrt2(0), QSqrt2(7), QSqrt2::sqrt2(), -QSqrt2::sqrt2(), QSqrt2::s0(),
                            QSqrt2(make_rational(-3, 4), make_rational(5, 6)), QSqrt2(BigRational(0), make_rational(-2, 9))};
    for (const auto& c : cases) CHECK(QSqrt2::parse(c.to_string()) == c);
    CHECK(QSqrt2::parse("s0") == QSqrt2::s0());
    CHECK(QSqrt2::parse("1/3 + 1/5*sqrt2") == QSqrt2(make_rational(1, 3), make_rational(1, 5)));
    CHECK(QSqrt2::parse("-1/2") == QSqrt2(make_rational(-1, 2)));
    CHECK(QSqrt2::parse("3*sqrt2") == QSqrt2(BigRational(0), BigRational(3)));
    CHECK_THROWS(QSqrt2::parse("sqrt3"));
    CHECK_THROWS(QSqrt2::parse("1 + 2"));
  }

  TEST_CASE("exact sign agrees with 100-digit evaluation") {
    std::mt19937_64 rng(2718);
    std::uniform_int_distribution<long> big(-1000000000000L, 1000000000000L);
    std::uniform_int_distribution<long> den(1, 1000000);
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
      QSqrt2 x;
      if (i % 2 == 0) {
        x = QSqrt2(make_rational(big(rng), den(rng)), make_rational(big(rng), den(rng)));
      } else {
        // Near-cancelling a + b sqrt2 with a/b close to -sqrt2: Pell-type pairs plus a perturbation.
        long p = 1, q = 1;
        const int steps = 1 + static_cast<int>(rng() % 25);
        for (int s = 0; s < steps; ++s) {
          const long np = p + 2 * q;
          q = p + q;
          p = np;
        }
        const long bump = static_cast<long>(rng() % 3) - 1;
        x = QSqrt2(BigRational(p + bump), BigRational(-q));
      }
      const oracle::Dec100 v = oracle::to_float<oracle::Dec100>(x);
      const int numeric = v > 0 ? 1 : (v < 0 ? -1 : 0);
      CHECK(x.sign() == numeric);
      ++checked;
    }
    CHECK(checked == 1000);
  }

  TEST_CASE("rational enclosures and decimal output") {
    const QSqrt2 x = QSqrt2::s0();
    const BigRational lo = x.lower(200);
    const BigRational hi = x.upper(200);
    CHECK(QSqrt2(lo) <= x);
    CHECK(QSqrt2(hi) >= x);
    CHECK(hi - lo < pow2(-190));
    CHECK(x.to_decimal_upper() == "0.41421356237309504880168872421");
    CHECK(QSqrt2(-2, 0).to_decimal_upper() == "-2");
  }
}
