#include "rankbound/graph/invariants.hpp"

#include "rankbound/graph/mbound.hpp"
#include "rankbound/graph/rank.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace rankbound::graph {

namespace {

// Groups the vertices of `keep` by their neighbourhood restricted to `keep`.
std::vector<std::vector<Vertex>> classes_within(const Graph& g, const VertexSet& keep) {
  std::map<VertexSet, std::vector<Vertex>> groups;
  for (auto x = keep.find_first(); x != VertexSet::npos; x = keep.find_next(x)) {
    groups[g.neighbors(x) & keep].push_back(x);
  }
  std::vector<std::vector<Vertex>> out;
  for (auto& [row, members] : groups) {
    if (members.size() > 1) out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

void require_reduced(const Graph& g, const char* what) {
  if (!is_reduced(g)) throw std::invalid_argument(std::string(what) + " requires a reduced graph");
}

}  // namespace

std::vector<std::vector<Vertex>> duplication_classes(const Graph& g) {
  VertexSet all(g.order());
  all.set();
  return classes_within(g, all);
}

bool is_reduced(const Graph& g) {
  if (g.has_isolated_vertex()) return false;
  std::vector<VertexSet> rows;
  rows.reserve(g.order());
  for (Vertex u = 0; u < g.order(); ++u) rows.push_back(g.neighbors(u));
  std::sort(rows.begin(), rows.end());
  return std::adjacent_find(rows.begin(), rows.end()) == rows.end();
}

Graph reduce(const Graph& g) {
  Graph cur = g;
  for (;;) {
    VertexSet drop(cur.order());
    for (Vertex u = 0; u < cur.order(); ++u) {
      if (cur.degree(u) == 0) drop.set(u);
    }
    for (const auto& cls : duplication_classes(cur)) {
      for (std::size_t i = 1; i < cls.size(); ++i) drop.set(cls[i]);
    }
    if (drop.none()) return cur;
    cur = cur.without(drop);
  }
}

VertexSet delta(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.order() || v >= g.order()) {
    throw std::invalid_argument("delta: vertex out of range for order " + std::to_string(g.order()));
  }
  if (u == v) throw std::invalid_argument("delta: u and v must be distinct");
  return g.neighbors(u) ^ g.neighbors(v);
}

namespace {

struct MinPair {
  Vertex u;
  Vertex v;
  std::size_t size;
};

std::optional<MinPair> min_delta_pair(const Graph& g) {
  std::optional<MinPair> best;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v)) continue;
      const std::size_t d = (g.neighbors(u) ^ g.neighbors(v)).count();
      if (!best || d < best->size) best = MinPair{u, v, d};
    }
  }
  return best;
}

}  // namespace

std::size_t tau(const Graph& g) {
  if (g.is_complete()) throw std::invalid_argument("tau is undefined for complete graphs");
  require_reduced(g, "tau");
  return min_delta_pair(g)->size;
}

std::size_t rho(const Graph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("rho is undefined for graphs without edges");
  const std::size_t n = g.order();
  const std::size_t r = rank(g);
  std::size_t limit = n;
  if (!g.is_complete() && is_reduced(g)) limit = min_delta_pair(g)->size;

  for (std::size_t k = 1; k <= limit; ++k) {
    // Lexicographic k-subsets of {0..n-1}.
    std::vector<Vertex> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      VertexSet s(n);
      for (Vertex x : idx) s.set(x);
      if (rank(g.without(s)) < r) return k;
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  // Removing tau vertices always lowers the rank of a reduced graph; reaching
  // here means that guarantee failed.
  throw std::logic_error("rho search exhausted its bound without a rank drop");
}

RankProfile rank_profile(const Graph& g) {
  RankProfile p;
  p.order = g.order();
  p.rank = rank(g);
  p.reduced = is_reduced(g);
  if (p.rank >= 2 && p.rank <= static_cast<std::size_t>(kMaxBoundRank)) {
    p.m_of_rank = m_of(static_cast<int>(p.rank));
    p.m_prime_of_rank = m_prime_of(static_cast<int>(p.rank));
  }
  return p;
}

bool KlReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const KlCheck& c) { return c.pass; });
}

KlReport kl_check(const Graph& g) {
  require_reduced(g, "kl_check");
  KlReport report;
  report.rank = rank(g);
  const long r = static_cast<long>(report.rank);
  auto record = [&](KlCheckKind kind, Vertex u, std::optional<Vertex> v, const VertexSet& removed, long bound) {
    const std::size_t after = rank(g.without(removed));
    report.checks.push_back({kind, u, v, after, bound, static_cast<long>(after) <= bound});
  };
  for (Vertex v = 0; v < g.order(); ++v) {
    record(KlCheckKind::neighbourhood, v, std::nullopt, g.neighbors(v), r - 2);
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const bool adj = g.adjacent(u, v);
      record(adj ? KlCheckKind::adjacent_delta : KlCheckKind::non_adjacent_delta, u, v, delta(g, u, v),
             adj ? r - 1 : r - 2);
    }
  }
  return report;
}

DuplicationWitness duplication_witness(const Graph& g) {
  if (g.is_complete()) throw std::invalid_argument("duplication_witness is undefined for complete graphs");
  require_reduced(g, "duplication_witness");

  DuplicationWitness w;
  const MinPair pair = *min_delta_pair(g);
  w.u = pair.u;
  w.v = pair.v;
  const VertexSet removed = delta(g, pair.u, pair.v);
  const VertexSet keep = ~removed;
  w.removed = to_vector(removed);
  w.classes = classes_within(g, keep);
  for (auto x = keep.find_first(); x != VertexSet::npos; x = keep.find_next(x)) {
    if ((g.neighbors(x) & keep).none()) {
      if (!w.isolated) w.isolated = x;
      ++w.isolated_count;
    }
  }
  w.rank_g = rank(g);
  w.rank_h = rank(g.without(removed));

  const bool all_pairs = std::all_of(w.classes.begin(), w.classes.end(), [](const auto& c) { return c.size() == 2; });
  if (!all_pairs || w.removed.empty() || w.classes.empty()) return w;

  // side(t, i): +1 if t sees only classes[i][0], -1 if only classes[i][1], 0 otherwise.
  auto side = [&](Vertex t, const std::vector<Vertex>& cls) {
    const bool a = g.adjacent(t, cls[0]);
    const bool b = g.adjacent(t, cls[1]);
    if (a == b) return 0;
    return a ? 1 : -1;
  };

  const Vertex t0 = w.removed.front();
  const int s0 = side(t0, w.classes.front());
  if (s0 == 0) return w;
  for (std::size_t i = 1; i < w.classes.size(); ++i) {
    const int si = side(t0, w.classes[i]);
    if (si == 0) return w;
    if (si != s0) std::swap(w.classes[i][0], w.classes[i][1]);
  }
  for (Vertex t : w.removed) {
    const int st = side(t, w.classes.front());
    if (st == 0) return w;
    for (std::size_t i = 1; i < w.classes.size(); ++i) {
      if (side(t, w.classes[i]) != st) {
        w.t1.clear();
        w.t2.clear();
        return w;
      }
    }
    (st > 0 ? w.t1 : w.t2).push_back(t);
  }
  w.split_found = true;
  return w;
}

bool minimal_cx_filter(const Graph& g) {
  if (!is_reduced(g)) return false;
  const std::size_t r = rank(g);
  if (r < 2 || r > static_cast<std::size_t>(kMaxBoundRank)) return false;
  return g.order() == m_of(static_cast<int>(r)) + 1;
}

}  // namespace rankbound::graph
