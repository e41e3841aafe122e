#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace rankbound::graph {

using Vertex = std::size_t;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;
using Edge = std::pair<Vertex, Vertex>;

std::vector<Vertex> to_vector(const VertexSet& set);
VertexSet make_vertex_set(std::size_t n, std::span<const Vertex> members);

/// Undirected simple graph on vertices 0..n-1, adjacency rows as bitsets.
///
/// Row u is N(u). Rows are symmetric and loop-free; every mutator keeps that.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Throws std::invalid_argument on out-of-range endpoints or loops.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph complete(std::size_t n);
  static Graph path(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph edgeless(std::size_t n) { return Graph(n); }

  std::size_t order() const { return adj_.size(); }
  std::size_t edge_count() const;
  bool empty() const { return adj_.empty(); }

  bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }
  const VertexSet& neighbors(Vertex u) const { return adj_[u]; }
  std::size_t degree(Vertex u) const { return adj_[u].count(); }
  std::vector<Edge> edges() const;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  /// Subgraph induced on `keep`, vertices renumbered in increasing order.
  Graph induced(const VertexSet& keep) const;
  /// G - X: the subgraph induced on the complement of `removed`.
  Graph without(const VertexSet& removed) const;
  /// Relabels so that old vertex v becomes perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;
  /// G plus one new vertex adjacent to exactly `neighbors` (given in the old numbering).
  Graph with_vertex(const VertexSet& neighbors) const;

  bool is_complete() const;
  bool has_isolated_vertex() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;
  std::vector<VertexSet> adj_;
};

}  // namespace rankbound::graph
