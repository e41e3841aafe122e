#include "doctest.h"
#include "oracles.hpp"

#include "rankbound/graph/invariants.hpp"
#include "rankbound/graph/mbound.hpp"
#include "rankbound/graph/rank.hpp"
#include "rankbound/hunt/canonical.hpp"
#include "rankbound/hunt/census.hpp"
#include "rankbound/hunt/extremal.hpp"
#include "rankbound/hunt/suites.hpp"
#include "rankbound/io/graph6.hpp"

#include <sstream>

using namespace rankbound::hunt;
using rankbound::graph::Graph;
using rankbound::graph::m_of;

TEST_SUITE("hunt") {
  TEST_CASE("census up to order 8") {
    const ConjectureReport r = verify_conjecture(8, 4);
    CHECK(r.holds());
    CHECK(r.violation_count == 0);
    REQUIRE(r.orders.size() == 8);
    CHECK(r.per_rank_max_order.at(2) == 2);
    CHECK(r.per_rank_max_order.at(3) == 3);
    CHECK(r.per_rank_max_order.at(4) == 6);
    CHECK(r.per_rank_max_order.at(4) == m_of(4));
    CHECK(r.per_rank_max_order.at(5) == 8);
    for (const auto& [rank, order] : r.per_rank_max_order) CHECK(order <= m_of(static_cast<int>(rank)));
    // m(r) + 1 <= 8 for r = 2, 3, 4; m(5) + 1 = 9
    CHECK(r.covered_ranks == std::vector<int>{2, 3, 4});
    std::size_t reduced = 0;
    for (const CensusReport& c : r.orders) {
      reduced += c.reduced_graphs;
      CHECK(c.violations.empty());
    }
    CHECK(reduced == 0 + 1 + 1 + 4 + 12 + 66 + 522 + 7525);
    CHECK(r.orders[7].total_graphs == 12346);
    CHECK_THROWS_AS(verify_conjecture(kMaxOrder + 1), std::invalid_argument);
  }

  TEST_CASE("census from a graph6 stream") {
    using rankbound::io::to_graph6;
    std::istringstream ok(to_graph6(Graph::cycle(5)) + "\n" + to_graph6(Graph::complete(2)) + "\n" +
                          to_graph6(Graph::cycle(4)) + "\n");
    const ConjectureReport a = verify_conjecture_stream(ok);
    CHECK(a.holds());
    CHECK(a.per_rank_max_order.at(5) == 5);
    CensusBuilder b;
    b.add(Graph::cycle(5));
    b.add(Graph::complete(2));
    const ConjectureReport br = b.finish();
    CHECK(br.per_rank_max_order.at(5) == 5);
    CHECK(br.per_rank_max_order.at(2) == 2);
  }

  TEST_CASE("extremal graphs reach m(r)") {
    for (int r = 2; r <= 10; ++r) {
      CAPTURE(r);
      const Graph g = construct_extremal(r);
      CHECK(rankbound::graph::is_reduced(g));
      CHECK(g.order() == m_of(r));
      CHECK(rankbound::graph::rank(g) == static_cast<std::size_t>(r));
      CHECK(oracle::rational_rank(g) == static_cast<std::size_t>(r));
    }
    CHECK(construct_extremal(2) == Graph::complete(2));
    CHECK(construct_extremal(3) == Graph::complete(3));
    CHECK(construct_extremal(4) == doubling_step(Graph::complete(2)));
    CHECK_THROWS_AS(construct_extremal(1), std::invalid_argument);
    CHECK_THROWS_AS(construct_extremal(13), std::invalid_argument);
  }

  TEST_CASE("doubling K3 overshoots the rank") {
    const Graph g = doubling_step(Graph::complete(3));
    CHECK(g.order() == 8);
    CHECK(rankbound::graph::rank(g) == 6);
    CHECK(oracle::rational_rank(g) == 6);
  }

  TEST_CASE("m inequalities") {
    const MInequalityReport r = verify_m_inequalities(60);
    CHECK(r.all_hold());
    CHECK(r.recursion_checks == 2 * (60 - 4 + 1));
    // r - 5 values of k for each r >= 6, r - 6 for each r >= 10
    std::size_t i_count = 0, ii_count = 0;
    for (int q = 6; q <= 60; ++q) i_count += static_cast<std::size_t>(q - 5);
    for (int q = 10; q <= 60; ++q) ii_count += static_cast<std::size_t>(q - 6);
    CHECK(r.sum_checks == i_count);
    CHECK(r.shifted_sum_checks == ii_count);
    CHECK_THROWS_AS(verify_m_inequalities(9), std::invalid_argument);

    // worked forms
    CHECK(m_of(3) + m_of(3) <= m_of(4) + 1);
    CHECK(m_of(3) + m_of(3) == 6);
    CHECK(m_of(4) + m_of(7) == 24);
    CHECK(m_of(4) + m_of(7) <= m_of(8));
    CHECK(m_of(8) == 30);
    CHECK(m_of(4) + m_of(7) <= m_of(9) + 1);
    CHECK(m_of(4) + m_of(8) == 36);
    CHECK(m_of(4) + m_of(8) <= m_of(9));
    CHECK(m_of(9) == 38);
  }

  TEST_CASE("lemma suite") {
    const LemmaSuiteReport six = lemma_suite(6);
    CHECK(six.all_pass());
    CHECK(six.graphs_processed == 1 + 1 + 4 + 12 + 66);

    const LemmaSuiteReport seven = lemma_suite(7, 4);
    CHECK(seven.all_pass());
    CHECK(seven.reduced_per_order.at(7) == 522);
    CHECK(seven.graphs_processed == 606);
    CHECK(seven.checks_run.size() >= 5);
    CHECK_THROWS_AS(lemma_suite(9), std::invalid_argument);
  }

  TEST_CASE("P4 passes every individual check") {
    LemmaSuiteReport r;
    run_lemma_checks(Graph::path(4), r);
    CHECK(r.all_pass());
    CHECK(r.checks_run.count("witness") == 1);
  }
}
