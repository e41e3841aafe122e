#include "doctest.h"
#include "oracles.hpp"

#include "rankbound/codes/lemma.hpp"

using namespace rankbound::codes;

namespace {

using F = oracle::Float50;

}  // namespace

TEST_SUITE("code_lemma") {
  TEST_CASE("offset -4 holds on 47..118") {
    const auto reports = verify_code_lemma(47, 118, -4);
    REQUIRE(reports.size() == 72);
    for (const BoundReport& r : reports) {
      CAPTURE(r.n);
      REQUIRE(r.holds);
      CHECK(*r.holds);
      CHECK(r.method == Method::levenshtein);
      CHECK(r.value_exact);
    }
    CHECK(reports.front().n == 47);
    CHECK(reports.back().n == 118);
  }

  TEST_CASE("offset -4 fails just below the range") {
    const auto r = verify_code_lemma(46, 46, -4);
    REQUIRE(r.size() == 1);
    CHECK_FALSE(*r[0].holds);
    CHECK(r[0].threshold == QSqrt2(10485758));
  }

  TEST_CASE("offset +2 holds on 3..118") {
    for (const BoundReport& r : verify_code_lemma(3, 118, 2)) {
      CAPTURE(r.n);
      CHECK(*r.holds);
    }
  }

  TEST_CASE("verdicts agree with a floating-point comparison where the margin is wide") {
    for (const BoundReport& r : verify_code_lemma(40, 130, -4)) {
      const F v = oracle::to_float<F>(r.value);
      const F t = oracle::to_float<F>(*r.threshold);
      if (abs(v / t - 1) > F("1e-20")) CHECK(*r.holds == (v < t));
    }
  }

  TEST_CASE("closed form takes over above the crossover") {
    const auto r = verify_code_lemma(117, 120, -4);
    CHECK(r[0].method == Method::levenshtein);
    CHECK(r[1].method == Method::levenshtein);
    CHECK(r[2].method == Method::closed_form);
    CHECK(r[3].method == Method::closed_form);
    for (const auto& x : r) CHECK(*x.holds);
  }

  TEST_CASE("tail certificate") {
    const TailCertificate c = tail_certificate(118, 10000, -4);
    CHECK(c.valid());
    CHECK(c.start_holds);
    CHECK(c.ratio_bound_at_start);
    CHECK(c.window_checked == 10000 - 118 + 1);
    CHECK_FALSE(c.first_window_failure);
    const TailCertificate early = tail_certificate(26, 40, -4);
    CHECK(early.ratio_bound_at_start);
    CHECK_FALSE(early.start_holds);
    CHECK_FALSE(early.valid());
    REQUIRE(early.first_window_failure);
    CHECK(*early.first_window_failure == 26);
    CHECK_THROWS_AS(tail_certificate(25, 40, -4), std::invalid_argument);
  }

  TEST_CASE("thread count does not change the output") {
    const auto one = verify_code_lemma(3, 130, -4, 1);
    const auto many = verify_code_lemma(3, 130, -4, 7);
    REQUIRE(one.size() == many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
      CHECK(one[i].n == many[i].n);
      CHECK(one[i].value == many[i].value);
      CHECK(one[i].holds == many[i].holds);
      CHECK(one[i].k == many[i].k);
    }
  }
}
