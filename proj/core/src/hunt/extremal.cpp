#include "rankbound/hunt/extremal.hpp"

#include "rankbound/graph/invariants.hpp"
#include "rankbound/graph/mbound.hpp"
#include "rankbound/graph/rank.hpp"

#include <bit>

namespace rankbound::hunt {

using graph::Graph;
using graph::Vertex;

namespace {

Graph cube_complement() {
  Graph g(8);
  for (Vertex u = 0; u < 8; ++u) {
    for (Vertex v = u + 1; v < 8; ++v) {
      if (std::popcount(u ^ v) != 1) g.add_edge(u, v);
    }
  }
  return g;
}

Graph build(int r) {
  if (r == 2) return Graph::complete(2);
  if (r == 3) return Graph::complete(3);
  if (r == 5) return cube_complement();
  return doubling_step(build(r - 2));
}

}  // namespace

Graph doubling_step(const Graph& g) {
  const std::size_t n = g.order();
  Graph h(2 * n + 2);
  for (const auto& [a, b] : g.edges()) {
    h.add_edge(a, b);
    h.add_edge(a, n + b);
    h.add_edge(n + a, b);
    h.add_edge(n + a, n + b);
  }
  const Vertex u = 2 * n;
  const Vertex v = 2 * n + 1;
  h.add_edge(u, v);
  for (Vertex x = 0; x < n; ++x) {
    h.add_edge(u, x);
    h.add_edge(v, n + x);
  }
  return h;
}

Graph construct_extremal(int r) {
  if (r < 2 || r > 12) throw std::invalid_argument("construct_extremal needs 2 <= r <= 12");
  Graph g = build(r);
  const std::size_t order = g.order();
  const std::size_t want = graph::m_of(r);
  const std::size_t got_rank = graph::rank(g);
  const bool reduced = graph::is_reduced(g);
  if (!reduced || got_rank != static_cast<std::size_t>(r) || order != want) {
    throw ExtremalConstructionError("construction for r = " + std::to_string(r) + " gave order " +
                                    std::to_string(order) + " (want " + std::to_string(want) + "), rank " +
                                    std::to_string(got_rank) + (reduced ? ", reduced" : ", not reduced"));
  }
  return g;
}

}  // namespace rankbound::hunt
