#include "doctest.h"

#include "rankbound/exact/sturm.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace rankbound::exact;

namespace {

RationalPolynomial product_of_roots(const std::vector<BigRational>& roots) {
  RationalPolynomial p = RationalPolynomial::constant(1);
  for (const auto& r : roots) p *= RationalPolynomial::linear_factor(r);
  return p;
}

}  // namespace

TEST_SUITE("polynomial") {
  TEST_CASE("arithmetic and division") {
    const RationalPolynomial t = RationalPolynomial::identity();
    const RationalPolynomial p = t * t - RationalPolynomial::constant(1);
    const auto [q, r] = p.divmod(t - RationalPolynomial::constant(1));
    CHECK(q == t + RationalPolynomial::constant(1));
    CHECK(r.is_zero());
    CHECK(p.degree() == 2);
    CHECK(RationalPolynomial().degree() == -1);
    CHECK(p.derivative() == RationalPolynomial::constant(2) * t);
    CHECK(p.reflected() == p);
    CHECK_THROWS_AS(p.divmod(RationalPolynomial()), std::domain_error);
    CHECK(gcd(p, t - RationalPolynomial::constant(1)) == t - RationalPolynomial::constant(1));
  }

  TEST_CASE("canonical text form") {
    const RationalPolynomial p{make_rational(-1, 14), make_rational(1, 7), make_rational(15, 14)};
    CHECK(p.to_string() == "15/14*t^2 + 1/7*t - 1/14");
    CHECK(RationalPolynomial().to_string() == "0");
    CHECK(RationalPolynomial::identity().to_string() == "t");
  }

  TEST_CASE("evaluation at Q(sqrt2) points") {
    const RationalPolynomial p{BigRational(-2), BigRational(0), BigRational(1)};  // t^2 - 2
    CHECK(p.evaluate(QSqrt2::sqrt2()).is_zero());
    CHECK(p.sign_at(QSqrt2::sqrt2()) == 0);
    CHECK(p.sign_at(QSqrt2::s0()) < 0);
  }

  TEST_CASE("Sturm counts on products of linear factors match the factor count") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 7);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<BigRational> roots;
      const int k = 1 + static_cast<int>(rng() % 7);
      for (int i = 0; i < k; ++i) roots.push_back(make_rational(num(rng), den(rng)));
      // Repeat some roots; the chain works on the square-free part.
      if (trial % 3 == 0) roots.push_back(roots.front());
      const RationalPolynomial p = product_of_roots(roots);
      const SturmChain chain(p);
      std::set<BigRational> distinct(roots.begin(), roots.end());
      CHECK(chain.count_real_roots() == distinct.size());
      for (int q = 0; q < 10; ++q) {
        BigRational a = make_rational(num(rng), den(rng));
        BigRational b = make_rational(num(rng), den(rng));
        if (b < a) std::swap(a, b);
        const auto want = static_cast<std::size_t>(
            std::count_if(distinct.begin(), distinct.end(), [&](const BigRational& r) { return r > a && r <= b; }));
        CHECK(chain.count_roots(a, b) == want);
      }
    }
  }

  TEST_CASE("Sturm counts with irrational roots") {
    // (t^2 - 2)(t - 1)(t + 3): roots -3, -sqrt2, 1, sqrt2
    const RationalPolynomial p = RationalPolynomial{BigRational(-2), BigRational(0), BigRational(1)} *
                                 RationalPolynomial::linear_factor(1) * RationalPolynomial::linear_factor(-3);
    const SturmChain chain(p);
    CHECK(chain.count_real_roots() == 4);
    CHECK(chain.count_roots_above(QSqrt2::s0()) == 2);
    CHECK(chain.count_roots_above(QSqrt2::sqrt2()) == 0);
    CHECK(chain.count_roots_above(-QSqrt2::sqrt2()) == 2);
    CHECK(chain.count_roots_above(BigRational(-4)) == 4);
  }

  TEST_CASE("largest_zero isolates and compares exactly") {
    // (10t + 1)/11 has its root at -1/10
    IsolatedRoot r = largest_zero(RationalPolynomial{make_rational(1, 11), make_rational(10, 11)});
    CHECK(r.compare(make_rational(-1, 10)) == 0);
    CHECK(r.compare(BigRational(0)) > 0);
    CHECK(r.compare(make_rational(-1, 5)) < 0);

    IsolatedRoot z = largest_zero(RationalPolynomial::identity());
    CHECK(z.compare(BigRational(0)) == 0);

    // 15t^2 + 2t - 1 = (5t - 1)(3t + 1): largest root 1/5
    IsolatedRoot q = largest_zero(RationalPolynomial{make_rational(-1, 14), make_rational(1, 7), make_rational(15, 14)});
    CHECK(q.compare(make_rational(1, 5)) == 0);
    CHECK(q.compare(QSqrt2::s0()) > 0);
    q.refine_to(pow2(-100));
    CHECK(q.width() <= pow2(-100));
    CHECK(q.lo() < make_rational(1, 5));
    CHECK(make_rational(1, 5) <= q.hi());

    // t^2 - 2: root sqrt2 outside (-1, 1]
    CHECK_THROWS_AS(largest_zero(RationalPolynomial{BigRational(-2), BigRational(0), BigRational(1)}), std::domain_error);
    // t^2 + 1: no real root
    CHECK_THROWS_AS(largest_zero(RationalPolynomial{BigRational(1), BigRational(0), BigRational(1)}), std::domain_error);
    CHECK_THROWS_AS(largest_zero(RationalPolynomial::constant(3)), std::domain_error);

    IsolatedRoot s = largest_real_root(RationalPolynomial{BigRational(-2), BigRational(0), BigRational(1)});
    CHECK(s.compare(QSqrt2::sqrt2()) == 0);
    CHECK(s.compare(QSqrt2(make_rational(141421, 100000))) < 0);
  }
}
