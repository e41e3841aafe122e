#pragma once

#include "rankbound/graph/graph.hpp"

#include <array>
#include <cstdint>

namespace rankbound::hunt {

inline constexpr int kMaxOrder = 10;

/// Dense graph on at most kMaxOrder vertices, one 16-bit row per vertex.
struct SmallGraph {
  int n = 0;
  std::array<std::uint16_t, kMaxOrder> rows{};

  bool adjacent(int u, int v) const { return (rows[u] >> v) & 1U; }
  void add_edge(int u, int v) {
    rows[u] |= static_cast<std::uint16_t>(1U << v);
    rows[v] |= static_cast<std::uint16_t>(1U << u);
  }
  int degree(int u) const;

  /// Upper-triangle bits in graph6 order (x01, x02, x12, x03, ...), first bit most significant.
  std::uint64_t code() const;
  /// Image under perm: vertex v becomes perm[v].
  SmallGraph relabeled(const std::array<std::uint8_t, kMaxOrder>& perm) const;
  bool is_reduced() const;

  graph::Graph to_graph() const;
  static SmallGraph from_graph(const graph::Graph& g);

  friend bool operator==(const SmallGraph& a, const SmallGraph& b) {
    if (a.n != b.n) return false;
    for (int i = 0; i < a.n; ++i) {
      if (a.rows[i] != b.rows[i]) return false;
    }
    return true;
  }
};

struct Canonical {
  /// lab[i] is the vertex placed at canonical position i.
  std::array<std::uint8_t, kMaxOrder> lab{};
  /// Smallest vertex in the automorphism orbit of each vertex.
  std::array<std::uint8_t, kMaxOrder> orbit{};
  std::uint64_t code = 0;
  SmallGraph form;  ///< the canonically relabeled graph; form.code() == code
};

/// Canonical labeling by partition refinement and a search tree over
/// individualizations; the canonical form is the leaf with the largest code.
/// Isomorphic graphs get identical forms and codes.
Canonical canonical_form(const SmallGraph& g);

}  // namespace rankbound::hunt
