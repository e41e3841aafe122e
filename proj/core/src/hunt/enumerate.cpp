#include "rankbound/hunt/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

namespace rankbound::hunt {

namespace {

// Vertex invariant used to pick the canonical deletion vertex cheaply.
std::array<int, kMaxOrder> deletion_keys(const SmallGraph& g) {
  std::array<int, kMaxOrder> key{};
  for (int v = 0; v < g.n; ++v) {
    int nsum = 0;
    for (int w = 0; w < g.n; ++w) {
      if (g.adjacent(v, w)) nsum += g.degree(w);
    }
    key[v] = g.degree(v) * 128 + nsum;
  }
  return key;
}

std::vector<SmallGraph> children(const SmallGraph& parent) {
  const int m = parent.n;
  std::vector<SmallGraph> out;
  std::vector<std::uint64_t> seen;
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    SmallGraph child = parent;
    child.n = m + 1;
    for (int u = 0; u < m; ++u) {
      if ((mask >> u) & 1U) child.add_edge(u, m);
    }
    const auto key = deletion_keys(child);
    const int min_key = *std::min_element(key.begin(), key.begin() + child.n);
    if (key[m] != min_key) continue;

    const Canonical c = canonical_form(child);
    int w = -1;
    for (int i = child.n - 1; i >= 0; --i) {
      if (key[c.lab[i]] == min_key) {
        w = c.lab[i];
        break;
      }
    }
    if (c.orbit[m] != c.orbit[w]) continue;
    if (std::find(seen.begin(), seen.end(), c.code) != seen.end()) continue;
    seen.push_back(c.code);
    out.push_back(c.form);
  }
  return out;
}

// Expands every parent, in parallel when asked, and hands the children to `sink` in parent order.
void expand(const std::vector<SmallGraph>& parents, unsigned threads,
            const std::function<void(const SmallGraph&)>& sink) {
  threads = std::max(1U, threads);
  if (threads == 1) {
    for (const auto& p : parents) {
      for (const auto& c : children(p)) sink(c);
    }
    return;
  }
  const std::size_t batch = 256 * static_cast<std::size_t>(threads);
  for (std::size_t begin = 0; begin < parents.size(); begin += batch) {
    const std::size_t end = std::min(parents.size(), begin + batch);
    std::vector<std::vector<SmallGraph>> results(end - begin);
    std::atomic<std::size_t> next{begin};
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = next++; i < end; i = next++) results[i - begin] = children(parents[i]);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (const auto& r : results) {
      for (const auto& c : r) sink(c);
    }
  }
}

}  // namespace

void for_each_graph(int order, const EnumerateOptions& options, const std::function<void(const SmallGraph&)>& visit) {
  if (order < 0 || order > kMaxOrder) {
    throw std::invalid_argument("enumeration order must be between 0 and " + std::to_string(kMaxOrder));
  }
  auto emit = [&](const SmallGraph& g) {
    if (!options.reduced_only || g.is_reduced()) visit(g);
  };
  if (order == 0) {
    emit(SmallGraph{});
    return;
  }
  std::vector<SmallGraph> level{SmallGraph{1, {}}};
  for (int n = 2; n < order; ++n) {
    std::vector<SmallGraph> next;
    expand(level, options.threads, [&](const SmallGraph& g) { next.push_back(g); });
    level = std::move(next);
  }
  if (order == 1) {
    emit(level.front());
    return;
  }
  expand(level, options.threads, emit);
}

std::vector<SmallGraph> enumerate_small(int order, const EnumerateOptions& options) {
  std::vector<SmallGraph> out;
  for_each_graph(order, options, [&](const SmallGraph& g) { out.push_back(g); });
  return out;
}

std::vector<graph::Graph> enumerate_graphs(int order, bool reduced_only, unsigned threads) {
  std::vector<graph::Graph> out;
  for_each_graph(order, {reduced_only, threads}, [&](const SmallGraph& g) { out.push_back(g.to_graph()); });
  return out;
}

}  // namespace rankbound::hunt
