#pragma once

#include "rankbound/graph/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rankbound::hunt {

struct InequalityFailure {
  std::string check;  ///< "recursion_m", "recursion_m_prime", "sum" or "shifted_sum"
  int r = 0;
  int k = 0;          ///< 0 for the recursions
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
};

struct MInequalityReport {
  int r_max = 0;
  std::size_t recursion_checks = 0;
  std::size_t sum_checks = 0;
  std::size_t shifted_sum_checks = 0;
  std::vector<InequalityFailure> failures;

  bool all_hold() const { return failures.empty(); }
};

/// m(r) = 2m(r-2) + 2 and m'(r) = 2m'(r-2) + 2 for 4 <= r <= r_max;
/// m(k) + m(r-k) <= m(r-2) + 1 for r >= 6, 3 <= k <= r-3;
/// m(k) + m(r-k+1) <= m(r-2) for r >= 10, 4 <= k <= r-3.
/// Requires 10 <= r_max <= kMaxBoundRank.
MInequalityReport verify_m_inequalities(int r_max);

struct LemmaFailure {
  std::string graph6;
  std::string check;
  std::string detail;
};

/// Per-graph checks over every reduced graph of order 2..max_order:
/// kl_check, rho <= tau, order <= 2^rank - 1, the duplication witness
/// (|removed| = tau, H has a duplication class, T1/T2 partition the removed
/// set when a split is found, H has maximum order among induced subgraphs with
/// duplicated vertices) and the +-1 code bounds.
struct LemmaSuiteReport {
  int max_order = 0;
  std::map<std::size_t, std::size_t> reduced_per_order;
  std::size_t graphs_processed = 0;
  std::map<std::string, std::size_t> checks_run;
  std::vector<LemmaFailure> failures;

  bool all_pass() const { return failures.empty(); }
};

/// Requires max_order <= 8.
LemmaSuiteReport lemma_suite(int max_order, unsigned threads = 1);

/// The individual checks, for one reduced non-trivial graph. Appends to `report`.
void run_lemma_checks(const graph::Graph& g, LemmaSuiteReport& report);

}  // namespace rankbound::hunt
