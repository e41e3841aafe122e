#include "rankbound/hunt/suites.hpp"

#include "rankbound/codes/embedding.hpp"
#include "rankbound/graph/invariants.hpp"
#include "rankbound/graph/mbound.hpp"
#include "rankbound/graph/rank.hpp"
#include "rankbound/hunt/enumerate.hpp"
#include "rankbound/io/graph6.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <stdexcept>
#include <thread>

namespace rankbound::hunt {

using graph::Graph;
using graph::m_of;
using graph::m_prime_of;

MInequalityReport verify_m_inequalities(int r_max) {
  if (r_max < 10 || r_max > graph::kMaxBoundRank) {
    throw std::invalid_argument("verify_m_inequalities needs 10 <= r_max <= " + std::to_string(graph::kMaxBoundRank));
  }
  MInequalityReport rep;
  rep.r_max = r_max;
  auto check = [&](const char* name, int r, int k, std::uint64_t lhs, std::uint64_t rhs) {
    if (lhs > rhs) rep.failures.push_back({name, r, k, lhs, rhs});
  };
  for (int r = 4; r <= r_max; ++r) {
    rep.recursion_checks += 2;
    const std::uint64_t m = m_of(r);
    const std::uint64_t mp = m_prime_of(r);
    if (m != 2 * m_of(r - 2) + 2) rep.failures.push_back({"recursion_m", r, 0, m, 2 * m_of(r - 2) + 2});
    if (mp != 2 * m_prime_of(r - 2) + 2) {
      rep.failures.push_back({"recursion_m_prime", r, 0, mp, 2 * m_prime_of(r - 2) + 2});
    }
  }
  for (int r = 6; r <= r_max; ++r) {
    for (int k = 3; k <= r - 3; ++k) {
      ++rep.sum_checks;
      check("sum", r, k, m_of(k) + m_of(r - k), m_of(r - 2) + 1);
    }
  }
  for (int r = 10; r <= r_max; ++r) {
    for (int k = 4; k <= r - 3; ++k) {
      ++rep.shifted_sum_checks;
      check("shifted_sum", r, k, m_of(k) + m_of(r - k + 1), m_of(r - 2));
    }
  }
  return rep;
}

namespace {

// Largest |S| such that the subgraph induced on S has two vertices with equal neighbourhoods in S.
std::size_t max_duplicated_induced(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> rows(n, 0);
  for (const auto& [a, b] : g.edges()) {
    rows[a] |= 1U << b;
    rows[b] |= 1U << a;
  }
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    const std::size_t size = static_cast<std::size_t>(std::popcount(s));
    if (size <= best) continue;
    bool dup = false;
    for (std::size_t u = 0; u < n && !dup; ++u) {
      if (!((s >> u) & 1U)) continue;
      for (std::size_t v = u + 1; v < n && !dup; ++v) {
        if (((s >> v) & 1U) && (rows[u] & s) == (rows[v] & s)) dup = true;
      }
    }
    if (dup) best = size;
  }
  return best;
}

}  // namespace

void run_lemma_checks(const Graph& g, LemmaSuiteReport& report) {
  const std::string g6 = io::to_graph6(g);
  auto fail = [&](const std::string& check, const std::string& detail) { report.failures.push_back({g6, check, detail}); };
  auto count = [&](const std::string& check) { ++report.checks_run[check]; };
  const std::size_t n = g.order();
  const std::size_t r = graph::rank(g);

  count("rank_lemma");
  const graph::KlReport kl = graph::kl_check(g);
  if (!kl.all_pass()) fail("rank_lemma", "a rank-drop inequality failed");

  count("order_bound");
  if (r < 2 || (r < 63 && n > (std::uint64_t{1} << r) - 1)) {
    fail("order_bound", "order " + std::to_string(n) + ", rank " + std::to_string(r));
  }

  count("embedding");
  const codes::CodeReport code = codes::graph_to_code(g);
  if (!code.all_hold()) fail("embedding", "max inner product " + exact::to_string(code.max_inner_product));

  if (g.is_complete()) return;

  count("rho_le_tau");
  const std::size_t t = graph::tau(g);
  const std::size_t p = graph::rho(g);
  if (p > t) fail("rho_le_tau", "rho " + std::to_string(p) + " > tau " + std::to_string(t));

  count("witness");
  const graph::DuplicationWitness w = graph::duplication_witness(g);
  std::string problem;
  if (w.removed.size() != t) problem = "|removed| != tau";
  if (problem.empty() && w.classes.empty()) problem = "H has no duplication class";
  if (problem.empty() && w.rank_h + 2 > w.rank_g) problem = "rank(H) > rank(G) - 2";
  if (problem.empty() && w.split_found) {
    std::vector<graph::Vertex> both = w.t1;
    both.insert(both.end(), w.t2.begin(), w.t2.end());
    std::sort(both.begin(), both.end());
    if (both != w.removed) problem = "T1, T2 do not partition the removed set";
  }
  if (problem.empty() && n <= 16 && max_duplicated_induced(g) != n - w.removed.size()) {
    problem = "H is not a largest induced subgraph with duplicated vertices";
  }
  if (!problem.empty()) fail("witness", problem);
}

LemmaSuiteReport lemma_suite(int max_order, unsigned threads) {
  if (max_order < 2 || max_order > 8) throw std::invalid_argument("lemma_suite needs 2 <= max_order <= 8");
  LemmaSuiteReport report;
  report.max_order = max_order;
  threads = std::max(1U, threads);
  for (int order = 2; order <= max_order; ++order) {
    const std::vector<Graph> graphs = enumerate_graphs(order, true, threads);
    report.reduced_per_order[static_cast<std::size_t>(order)] = graphs.size();
    report.graphs_processed += graphs.size();

    const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(graphs.size(), 1)));
    std::vector<LemmaSuiteReport> parts(workers);
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](unsigned t) {
      try {
        const std::size_t lo = graphs.size() * t / workers;
        const std::size_t hi = graphs.size() * (t + 1) / workers;
        for (std::size_t i = lo; i < hi; ++i) run_lemma_checks(graphs[i], parts[t]);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
    for (unsigned t = 0; t < workers; ++t) {
      if (errors[t]) std::rethrow_exception(errors[t]);
      for (const auto& [name, c] : parts[t].checks_run) report.checks_run[name] += c;
      report.failures.insert(report.failures.end(), parts[t].failures.begin(), parts[t].failures.end());
    }
  }
  return report;
}

}  // namespace rankbound::hunt
