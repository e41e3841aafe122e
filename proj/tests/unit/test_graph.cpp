#include "doctest.h"
#include "oracles.hpp"

#include "rankbound/graph/invariants.hpp"
#include "rankbound/graph/mbound.hpp"
#include "rankbound/graph/rank.hpp"

using namespace rankbound::graph;

namespace {

using Classes = std::vector<std::vector<Vertex>>;

std::vector<Vertex> members(const VertexSet& s) { return to_vector(s); }

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("rank") {
    CHECK(rank(Graph::complete(2)) == 2);
    CHECK(rank(Graph::cycle(4)) == 2);
    CHECK(rank(Graph::path(4)) == 4);
    CHECK(oracle::rational_rank(Graph::path(4)) == 4);
    CHECK(rank(Graph::complete(7)) == 7);
    CHECK(rank(Graph::edgeless(5)) == 0);
    CHECK(rank(Graph()) == 0);
    CHECK(rank(Graph::cycle(5)) == 5);
  }

  TEST_CASE("wide graphs go through arbitrary-precision elimination") {
    // Orders above 32 leave the __int128 path.
    for (std::size_t n : {33U, 40U, 64U}) {
      CHECK(rank(Graph::complete(n)) == n);
      CHECK(rank(Graph::cycle(n)) == oracle::rational_rank(Graph::cycle(n)));
      CHECK(rank(Graph::path(n)) == oracle::rational_rank(Graph::path(n)));
    }
  }

  TEST_CASE("duplication classes") {
    CHECK(duplication_classes(Graph::cycle(4)) == Classes{{0, 2}, {1, 3}});
    CHECK(duplication_classes(Graph::path(4)).empty());
    CHECK(duplication_classes(Graph::path(3)) == Classes{{0, 2}});
    CHECK(is_reduced(Graph::path(4)));
    CHECK_FALSE(is_reduced(Graph::path(3)));
    CHECK_FALSE(is_reduced(Graph::edgeless(2)));
  }

  TEST_CASE("reduce") {
    CHECK(reduce(Graph::cycle(4)) == Graph::complete(2));
    CHECK(reduce(Graph::complete(3)) == Graph::complete(3));
    CHECK(reduce(Graph::edgeless(5)).order() == 0);
    // A pendant pair: duplicates collapse, then nothing else changes.
    const Graph star = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
    CHECK(reduce(star) == Graph::complete(2));
  }

  TEST_CASE("delta") {
    const Graph p4 = Graph::path(4);
    CHECK(members(delta(p4, 0, 2)) == std::vector<Vertex>{3});
    CHECK(members(delta(p4, 0, 3)) == std::vector<Vertex>{1, 2});
    CHECK(delta(Graph::cycle(4), 0, 2).none());
    // Adjacent pairs contain themselves.
    CHECK(members(delta(p4, 0, 1)) == std::vector<Vertex>{0, 1, 2});
    CHECK_THROWS_AS(delta(p4, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(delta(p4, 0, 4), std::invalid_argument);
  }

  TEST_CASE("tau") {
    CHECK(tau(Graph::path(4)) == 1);
    CHECK(tau(Graph::cycle(5)) == 2);
    CHECK_THROWS_AS(tau(Graph::complete(4)), std::invalid_argument);
    CHECK_THROWS_AS(tau(Graph::cycle(4)), std::invalid_argument);
  }

  TEST_CASE("rho") {
    CHECK(rho(Graph::path(4)) == 1);
    for (std::size_t n = 2; n <= 7; ++n) CHECK(rho(Graph::complete(n)) == 1);
    // C4 minus a vertex is P3, still of rank 2; removing two opposite vertices leaves two isolated ones.
    CHECK(rho(Graph::cycle(4)) == 2);
    CHECK(rho(Graph::cycle(5)) == 1);
    CHECK_THROWS_AS(rho(Graph::edgeless(3)), std::invalid_argument);
  }

  TEST_CASE("m bounds") {
    CHECK(m_of(2) == 2);
    CHECK(m_of(3) == 3);
    CHECK(m_of(4) == 6);
    CHECK(m_of(5) == 8);
    CHECK(m_of(6) == 14);
    CHECK(m_of(6) == 2 * m_of(4) + 2);
    CHECK(m_of(10) == 62);
    CHECK(m_prime_of(4) == 62);
    CHECK_THROWS_AS(m_of(1), std::invalid_argument);
    CHECK_THROWS_AS(m_of(kMaxBoundRank + 1), std::invalid_argument);
    CHECK_NOTHROW(m_prime_of(kMaxBoundRank));
  }

  TEST_CASE("rank profile") {
    const RankProfile p = rank_profile(Graph::path(4));
    CHECK(p.order == 4);
    CHECK(p.rank == 4);
    CHECK(p.reduced);
    REQUIRE(p.m_of_rank);
    CHECK(*p.m_of_rank == 6);
    CHECK(*p.m_prime_of_rank == 62);
    CHECK_FALSE(rank_profile(Graph::edgeless(3)).m_of_rank);
  }

  TEST_CASE("rank-drop checks") {
    const KlReport p4 = kl_check(Graph::path(4));
    CHECK(p4.all_pass());
    CHECK(p4.rank == 4);
    CHECK(p4.checks.size() == 4 + 6);
    bool saw_b = false;
    for (const KlCheck& c : p4.checks) {
      if (c.kind == KlCheckKind::neighbourhood && c.u == 1) {
        saw_b = true;
        CHECK(c.rank_after == 0);
        CHECK(c.bound == 2);
      }
    }
    CHECK(saw_b);

    const KlReport k3 = kl_check(Graph::complete(3));
    for (const KlCheck& c : k3.checks) {
      if (c.kind == KlCheckKind::neighbourhood) {
        CHECK(c.rank_after == 0);
        CHECK(c.bound == 1);
      }
    }
    CHECK(k3.all_pass());
    CHECK_THROWS_AS(kl_check(Graph::cycle(4)), std::invalid_argument);
  }

  TEST_CASE("duplication witness") {
    const DuplicationWitness w = duplication_witness(Graph::path(4));
    CHECK(w.u == 0);
    CHECK(w.v == 2);
    CHECK(w.removed == std::vector<Vertex>{3});
    CHECK(w.classes == Classes{{0, 2}});
    CHECK(w.split_found);
    CHECK(w.t1.empty());
    CHECK(w.t2 == std::vector<Vertex>{3});
    CHECK(w.rank_g == 4);
    CHECK(w.rank_h == 2);

    const DuplicationWitness c5 = duplication_witness(Graph::cycle(5));
    CHECK(c5.removed.size() == 2);
    CHECK(c5.classes.size() == 1);

    CHECK_THROWS_AS(duplication_witness(Graph::cycle(4)), std::invalid_argument);
    CHECK_THROWS_AS(duplication_witness(Graph::complete(4)), std::invalid_argument);
  }

  TEST_CASE("minimal counterexample filter") {
    CHECK_FALSE(minimal_cx_filter(Graph::complete(3)));
    CHECK_FALSE(minimal_cx_filter(Graph::cycle(4)));
    CHECK_FALSE(minimal_cx_filter(Graph::path(4)));
    CHECK_FALSE(minimal_cx_filter(Graph::edgeless(3)));
  }
}
