#pragma once

#include "rankbound/graph/graph.hpp"

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace rankbound::hunt {

/// Census of one order.
struct CensusReport {
  std::size_t order = 0;
  std::size_t total_graphs = 0;
  std::size_t reduced_graphs = 0;
  std::map<std::size_t, std::size_t> rank_counts;  ///< rank -> number of reduced graphs of this order
  /// rank -> largest order of a reduced graph seen so far (this order and below).
  std::map<std::size_t, std::size_t> per_rank_max_order;
  std::vector<std::string> violations;  ///< graph6 of reduced graphs with order > m(rank)
};

struct ConjectureReport {
  std::size_t max_order = 0;
  std::vector<CensusReport> orders;
  std::map<std::size_t, std::size_t> per_rank_max_order;
  std::size_t violation_count = 0;
  /// Ranks r with m(r) + 1 <= max_order: a smallest counterexample of rank r
  /// would have order m(r) + 1, so none exists for these ranks.
  std::vector<int> covered_ranks;

  bool holds() const { return violation_count == 0; }
};

/// Accumulates graphs of any order; the report lists orders ascending.
class CensusBuilder {
 public:
  void add(const graph::Graph& g);
  ConjectureReport finish() const;

 private:
  std::map<std::size_t, CensusReport> by_order_;
};

/// Every graph of order 1..max_order from the generator. Throws for max_order > kMaxOrder.
ConjectureReport verify_conjecture(int max_order, unsigned threads = 1);

/// Same checks over a graph6 stream.
ConjectureReport verify_conjecture_stream(std::istream& graph6_lines);

}  // namespace rankbound::hunt
