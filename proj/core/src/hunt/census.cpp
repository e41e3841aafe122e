#include "rankbound/hunt/census.hpp"

#include "rankbound/graph/invariants.hpp"
#include "rankbound/graph/mbound.hpp"
#include "rankbound/graph/rank.hpp"
#include "rankbound/hunt/enumerate.hpp"
#include "rankbound/io/graph6.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rankbound::hunt {

namespace {

bool exceeds_m(std::size_t order, std::size_t r) {
  if (r < 2) return order > 0;
  if (r > static_cast<std::size_t>(graph::kMaxBoundRank)) return false;
  return order > graph::m_of(static_cast<int>(r));
}

}  // namespace

void CensusBuilder::add(const graph::Graph& g) {
  CensusReport& c = by_order_[g.order()];
  c.order = g.order();
  ++c.total_graphs;
  if (!graph::is_reduced(g)) return;
  ++c.reduced_graphs;
  const std::size_t r = graph::rank(g);
  ++c.rank_counts[r];
  if (exceeds_m(g.order(), r)) c.violations.push_back(io::to_graph6(g));
}

ConjectureReport CensusBuilder::finish() const {
  ConjectureReport report;
  std::map<std::size_t, std::size_t> running;
  for (const auto& [order, c] : by_order_) {
    CensusReport copy = c;
    for (const auto& [r, count] : c.rank_counts) {
      if (count > 0) running[r] = std::max(running[r], order);
    }
    copy.per_rank_max_order = running;
    report.violation_count += copy.violations.size();
    report.max_order = std::max(report.max_order, order);
    report.orders.push_back(std::move(copy));
  }
  report.per_rank_max_order = running;
  for (int r = 2; r <= graph::kMaxBoundRank; ++r) {
    if (graph::m_of(r) + 1 > report.max_order) break;
    report.covered_ranks.push_back(r);
  }
  return report;
}

ConjectureReport verify_conjecture(int max_order, unsigned threads) {
  if (max_order < 1 || max_order > kMaxOrder) {
    throw std::invalid_argument("census order must be between 1 and " + std::to_string(kMaxOrder));
  }
  CensusBuilder builder;
  for (int n = 1; n <= max_order; ++n) {
    for_each_graph(n, {false, threads}, [&](const SmallGraph& g) { builder.add(g.to_graph()); });
  }
  return builder.finish();
}

ConjectureReport verify_conjecture_stream(std::istream& graph6_lines) {
  CensusBuilder builder;
  io::read_graph6_stream(graph6_lines, [&](const graph::Graph& g) { builder.add(g); });
  return builder.finish();
}

}  // namespace rankbound::hunt
