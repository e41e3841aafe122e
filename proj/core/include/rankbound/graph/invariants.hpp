#pragma once

#include "rankbound/graph/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace rankbound::graph {

/// Maximal sets of at least two vertices with identical neighbourhoods, each
/// sorted, listed by smallest member. Vertices in no class are omitted.
std::vector<std::vector<Vertex>> duplication_classes(const Graph& g);

/// No isolated vertex and no two vertices with the same neighbourhood.
bool is_reduced(const Graph& g);

/// Collapses every duplication class to its smallest member and deletes
/// isolated vertices until nothing changes. rank(reduce(g)) == rank(g).
Graph reduce(const Graph& g);

/// N(u) symmetric-difference N(v). Throws std::invalid_argument on out-of-range
/// vertices or u == v.
VertexSet delta(const Graph& g, Vertex u, Vertex v);

/// min |delta(u, v)| over distinct non-adjacent pairs. Throws
/// std::invalid_argument when g is complete or not reduced.
std::size_t tau(const Graph& g);

/// Least k such that deleting some k vertices lowers the rank. Subsets are
/// searched by increasing size; for reduced non-complete graphs the search
/// stops at tau(g). Throws std::invalid_argument when g has no edge.
std::size_t rho(const Graph& g);

struct RankProfile {
  std::size_t order = 0;
  std::size_t rank = 0;
  std::optional<std::uint64_t> m_of_rank;        ///< absent when rank < 2
  std::optional<std::uint64_t> m_prime_of_rank;  ///< absent when rank < 2
  bool reduced = false;
};

RankProfile rank_profile(const Graph& g);

enum class KlCheckKind {
  neighbourhood,         ///< rank(G - N(v)) <= rank(G) - 2
  adjacent_delta,        ///< rank(G - delta(u,v)) <= rank(G) - 1, u ~ v
  non_adjacent_delta,    ///< rank(G - delta(u,v)) <= rank(G) - 2, u !~ v
};

struct KlCheck {
  KlCheckKind kind;
  Vertex u;
  std::optional<Vertex> v;
  std::size_t rank_after;
  long bound;
  bool pass;
};

struct KlReport {
  std::size_t rank = 0;
  std::vector<KlCheck> checks;
  bool all_pass() const;
};

/// Runs every rank-drop inequality for reduced graphs: one check per vertex and
/// one per unordered pair. Throws std::invalid_argument if g is not reduced.
KlReport kl_check(const Graph& g);

/// The induced subgraph H = G - removed of maximum order with duplicated
/// vertices, its duplication classes and the split of the removed vertices.
struct DuplicationWitness {
  Vertex u = 0;                 ///< minimising non-adjacent pair, u < v
  Vertex v = 0;
  std::vector<Vertex> removed;  ///< delta(u, v), |removed| == tau(G)
  std::vector<std::vector<Vertex>> classes;  ///< duplication classes of H, in G's numbering
  std::optional<Vertex> isolated;            ///< first isolated vertex of H
  std::size_t isolated_count = 0;
  bool split_found = false;
  std::vector<Vertex> t1;       ///< removed vertices on the v_i side of every class
  std::vector<Vertex> t2;       ///< removed vertices on the v_i' side of every class
  std::size_t rank_g = 0;
  std::size_t rank_h = 0;
};

/// Picks the lexicographically first non-adjacent pair minimising |delta|,
/// sets H = G - delta(u,v) and attempts the T1/T2 split. Class i is oriented
/// as (v_i, v_i'): class 0 as (smaller, larger), later classes so that the
/// first removed vertex sees v_i exactly when it sees v_0. A removed vertex
/// that is not adjacent to exactly one member of every two-element class, or
/// that breaks the orientation, leaves split_found false (not an error).
/// Throws std::invalid_argument if g is not reduced or is complete.
DuplicationWitness duplication_witness(const Graph& g);

/// True iff g is reduced and |g| == m(rank(g)) + 1.
bool minimal_cx_filter(const Graph& g);

}  // namespace rankbound::graph
