#include "rankbound/graph/graph.hpp"

#include <stdexcept>
#include <string>

namespace rankbound::graph {

std::vector<Vertex> to_vector(const VertexSet& set) {
  std::vector<Vertex> out;
  out.reserve(set.count());
  for (auto v = set.find_first(); v != VertexSet::npos; v = set.find_next(v)) out.push_back(v);
  return out;
}

VertexSet make_vertex_set(std::size_t n, std::span<const Vertex> members) {
  VertexSet s(n);
  for (Vertex v : members) {
    if (v >= n) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    s.set(v);
  }
  return s;
}

Graph::Graph(std::size_t n) : adj_(n, VertexSet(n)) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    g.adj_[u].set();
    g.adj_[u].reset(u);
  }
  return g;
}

Graph Graph::path(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

Graph Graph::cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (auto v = adj_[u].find_next(u); v != VertexSet::npos; v = adj_[u].find_next(v)) out.emplace_back(u, v);
  }
  return out;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= order()) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for order " + std::to_string(order()));
  }
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  adj_[u].set(v);
  adj_[v].set(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u].reset(v);
  adj_[v].reset(u);
}

Graph Graph::induced(const VertexSet& keep) const {
  if (keep.size() != order()) throw std::invalid_argument("vertex set width does not match graph order");
  const std::vector<Vertex> kept = to_vector(keep);
  Graph h(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = i + 1; j < kept.size(); ++j) {
      if (adj_[kept[i]].test(kept[j])) {
        h.adj_[i].set(j);
        h.adj_[j].set(i);
      }
    }
  }
  return h;
}

Graph Graph::without(const VertexSet& removed) const { return induced(~removed); }

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != order()) throw std::invalid_argument("permutation size does not match graph order");
  Graph h(order());
  for (Vertex u = 0; u < order(); ++u) {
    for (auto v = adj_[u].find_first(); v != VertexSet::npos; v = adj_[u].find_next(v)) h.adj_[perm[u]].set(perm[v]);
  }
  return h;
}

Graph Graph::with_vertex(const VertexSet& neighbors) const {
  if (neighbors.size() != order()) throw std::invalid_argument("neighbor set width does not match graph order");
  const std::size_t n = order();
  Graph h(n + 1);
  for (Vertex u = 0; u < n; ++u) {
    for (auto v = adj_[u].find_first(); v != VertexSet::npos; v = adj_[u].find_next(v)) h.adj_[u].set(v);
  }
  for (auto v = neighbors.find_first(); v != VertexSet::npos; v = neighbors.find_next(v)) h.add_edge(n, v);
  return h;
}

bool Graph::is_complete() const {
  for (const auto& row : adj_) {
    if (row.count() + 1 != order()) return false;
  }
  return true;
}

bool Graph::has_isolated_vertex() const {
  for (const auto& row : adj_) {
    if (row.none()) return true;
  }
  return false;
}

}  // namespace rankbound::graph
