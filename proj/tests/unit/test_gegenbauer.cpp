#include "doctest.h"
#include "oracles.hpp"

#include "rankbound/exact/gegenbauer.hpp"
#include "rankbound/exact/sturm.hpp"

#include <boost/math/special_functions/gegenbauer.hpp>

using namespace rankbound::exact;

TEST_SUITE("gegenbauer") {
  TEST_CASE("low-degree closed forms") {
    for (int n = 2; n <= 12; ++n) {
      CHECK(gegenbauer(n, 0) == RationalPolynomial::constant(1));
      CHECK(gegenbauer(n, 1) == RationalPolynomial::identity());
      // t((n+2)t^2 - 3)/(n-1)
      if (n >= 3) {
        const RationalPolynomial q3{BigRational(0), make_rational(-3, n - 1), BigRational(0), make_rational(n + 2, n - 1)};
        CHECK(gegenbauer(n, 3) == q3);
      }
    }
    CHECK(gegenbauer(3, 2) == RationalPolynomial{make_rational(-1, 2), BigRational(0), make_rational(3, 2)});
    CHECK_THROWS_AS(gegenbauer(1, 2), std::invalid_argument);
  }

  TEST_CASE("Q_k(1) = 1 and parity") {
    for (int n = 3; n <= 20; ++n) {
      for (int k = 0; k <= 40; ++k) {
        const RationalPolynomial q = gegenbauer(n, k);
        CHECK(q.degree() == k);
        CHECK(q.evaluate(BigRational(1)) == 1);
        for (int i = 0; i <= k; ++i) {
          if ((k - i) % 2 == 1) CHECK(q.coefficient(static_cast<std::size_t>(i)) == 0);
        }
      }
    }
  }

  TEST_CASE("bounded by one on [-1, 1]") {
    for (int n = 3; n <= 10; ++n) {
      for (int k = 0; k <= 10; ++k) {
        const RationalPolynomial q = gegenbauer(n, k);
        for (int i = 0; i <= 99; ++i) {
          const BigRational t = make_rational(2 * i - 99, 99);
          const BigRational v = q.evaluate(t);
          CHECK(v <= 1);
          CHECK(v >= -1);
        }
      }
    }
  }

  TEST_CASE("agrees with normalized Gegenbauer polynomials from Boost") {
    using F = oracle::Float50;
    for (int n = 3; n <= 12; ++n) {
      const F lambda = F(n - 2) / 2;
      for (unsigned k = 0; k <= 12; ++k) {
        const RationalPolynomial q = gegenbauer(n, static_cast<int>(k));
        const F at_one = boost::math::gegenbauer(k, lambda, F(1));
        for (int i = 0; i <= 8; ++i) {
          const BigRational t = make_rational(2 * i - 8, 9);
          const F want = boost::math::gegenbauer(k, lambda, oracle::to_float<F>(t)) / at_one;
          const F got = oracle::to_float<F>(q.evaluate(t));
          CHECK(abs(got - want) < F("1e-40"));
        }
      }
    }
  }

  TEST_CASE("adjacent polynomials: worked cases and exact division") {
    for (int n = 3; n <= 20; ++n) {
      CHECK(adjacent_poly(n, 1, AdjacentKind::k10) == RationalPolynomial{make_rational(1, n + 1), make_rational(n, n + 1)});
      CHECK(adjacent_poly(n, 0, AdjacentKind::k11) == RationalPolynomial::constant(1));
      CHECK(adjacent_poly(n, 1, AdjacentKind::k11) == RationalPolynomial::identity());
      for (int k = 1; k <= 15; ++k) {
        CHECK_NOTHROW(adjacent_poly(n, k, AdjacentKind::k10));
        CHECK_NOTHROW(adjacent_poly(n, k, AdjacentKind::k11));
        CHECK(adjacent_poly(n, k, AdjacentKind::k10).degree() == k);
        CHECK(adjacent_poly(n, k, AdjacentKind::k11).degree() == k);
      }
    }
    // (15t^2 + 2t - 1)/16, which is 1 at t = 1
    CHECK(adjacent_poly(13, 2, AdjacentKind::k10) ==
          RationalPolynomial{make_rational(-1, 16), make_rational(1, 8), make_rational(15, 16)});
    for (int n = 3; n <= 20; ++n) {
      for (int k = 1; k <= 10; ++k) {
        CHECK(adjacent_poly(n, k, AdjacentKind::k10).evaluate(BigRational(1)) == 1);
        CHECK(adjacent_poly(n, k - 1, AdjacentKind::k11).evaluate(BigRational(1)) == 1);
      }
    }
    CHECK(largest_zero(adjacent_poly(13, 2, AdjacentKind::k10)).compare(make_rational(1, 5)) == 0);
    CHECK(largest_zero(adjacent_poly(10, 1, AdjacentKind::k10)).compare(make_rational(-1, 10)) == 0);
  }

  TEST_CASE("interlacing of largest zeros") {
    for (int n = 3; n <= 20; ++n) {
      GegenbauerFamily fam(n);
      for (int k = 1; k <= 12; ++k) {
        IsolatedRoot t10 = largest_zero(fam.adjacent(k, AdjacentKind::k10));
        IsolatedRoot t11 = largest_zero(fam.adjacent(k, AdjacentKind::k11));
        // t_{k-1}^{1,1} < t_k^{1,0} < t_k^{1,1}
        if (k == 1) {
          CHECK(t10.compare(BigRational(-1)) < 0);
        } else {
          IsolatedRoot prev = largest_zero(fam.adjacent(k - 1, AdjacentKind::k11));
          prev.refine_to(pow2(-120));
          t10.refine_to(pow2(-120));
          CHECK(prev.hi() < t10.lo());
        }
        t10.refine_to(pow2(-120));
        t11.refine_to(pow2(-120));
        CHECK(t10.hi() < t11.lo());
      }
    }
  }

  TEST_CASE("locate_interval worked examples") {
    auto at = [](int n, const QSqrt2& s) { return locate_interval(n, s); };
    CHECK(at(10, QSqrt2(-1)).k == 1);
    CHECK(at(10, QSqrt2(-1)).branch == Branch::A);
    CHECK(at(10, QSqrt2(make_rational(-1, 10))).k == 1);
    CHECK(at(10, QSqrt2(make_rational(-1, 10))).branch == Branch::B);
    CHECK(at(10, QSqrt2(0)).k == 2);
    CHECK(at(10, QSqrt2(0)).branch == Branch::A);
    CHECK_THROWS_AS(at(10, QSqrt2(1)), std::invalid_argument);
    CHECK_THROWS_AS(at(10, QSqrt2(-2)), std::invalid_argument);
    CHECK_THROWS_AS(at(2, QSqrt2(0)), std::invalid_argument);
  }

  TEST_CASE("locate_interval places s inside its interval") {
    for (int n = 3; n <= 12; ++n) {
      GegenbauerFamily fam(n);
      for (int i = -9; i <= 9; ++i) {
        const QSqrt2 s(make_rational(i, 10));
        const IntervalLocation loc = locate_interval(fam, s);
        // s < t_k^{1,1}
        CHECK(largest_zero(fam.adjacent(loc.k, AdjacentKind::k11)).compare(s) < 0);
        // s >= t_{k-1}^{1,1}
        if (loc.k > 1) CHECK(largest_zero(fam.adjacent(loc.k - 1, AdjacentKind::k11)).compare(s) >= 0);
        const int vs10 = largest_zero(fam.adjacent(loc.k, AdjacentKind::k10)).compare(s);
        CHECK((loc.branch == Branch::A) == (vs10 < 0));
      }
    }
  }
}
