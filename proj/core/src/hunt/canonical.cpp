#include "rankbound/hunt/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace rankbound::hunt {

using Perm = std::array<std::uint8_t, kMaxOrder>;

int SmallGraph::degree(int u) const { return std::popcount(rows[u]); }

std::uint64_t SmallGraph::code() const {
  std::uint64_t c = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) c = (c << 1) | static_cast<std::uint64_t>(adjacent(i, j));
  }
  return c;
}

SmallGraph SmallGraph::relabeled(const Perm& perm) const {
  SmallGraph h;
  h.n = n;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (adjacent(u, v)) h.add_edge(perm[u], perm[v]);
    }
  }
  return h;
}

bool SmallGraph::is_reduced() const {
  for (int u = 0; u < n; ++u) {
    if (rows[u] == 0) return false;
    for (int v = u + 1; v < n; ++v) {
      if (rows[u] == rows[v]) return false;
    }
  }
  return true;
}

graph::Graph SmallGraph::to_graph() const {
  graph::Graph g(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (adjacent(u, v)) g.add_edge(static_cast<graph::Vertex>(u), static_cast<graph::Vertex>(v));
    }
  }
  return g;
}

SmallGraph SmallGraph::from_graph(const graph::Graph& g) {
  if (g.order() > static_cast<std::size_t>(kMaxOrder)) {
    throw std::invalid_argument("small graphs have at most " + std::to_string(kMaxOrder) + " vertices");
  }
  SmallGraph s;
  s.n = static_cast<int>(g.order());
  for (const auto& [u, v] : g.edges()) s.add_edge(static_cast<int>(u), static_cast<int>(v));
  return s;
}

namespace {

// Ordered partition: lab holds vertices by position, starts[p] marks the first position of a cell.
struct Partition {
  Perm lab{};
  std::array<bool, kMaxOrder + 1> starts{};
};

class Searcher {
 public:
  explicit Searcher(const SmallGraph& g) : g_(g), n_(g.n) {
    std::iota(orbit_parent_.begin(), orbit_parent_.end(), std::uint8_t{0});
  }

  Canonical run() {
    Partition p;
    for (int i = 0; i < n_; ++i) p.lab[i] = static_cast<std::uint8_t>(i);
    p.starts[0] = true;
    p.starts[n_] = true;
    path_.clear();
    search(p);

    Canonical c;
    c.lab = best_lab_;
    c.code = best_code_;
    Perm inverse{};
    for (int i = 0; i < n_; ++i) inverse[best_lab_[i]] = static_cast<std::uint8_t>(i);
    c.form = g_.relabeled(inverse);
    for (int v = 0; v < n_; ++v) c.orbit[v] = find(static_cast<std::uint8_t>(v));
    return c;
  }

 private:
  void refine(Partition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::array<std::uint16_t, kMaxOrder> cell_mask{};
      int cells = 0;
      std::array<int, kMaxOrder + 1> cell_start{};
      for (int i = 0; i < n_; ++i) {
        if (p.starts[i]) cell_start[cells++] = i;
        cell_mask[cells - 1] |= static_cast<std::uint16_t>(1U << p.lab[i]);
      }
      cell_start[cells] = n_;
      for (int c = 0; c < cells && !changed; ++c) {
        const int lo = cell_start[c];
        const int hi = cell_start[c + 1];
        if (hi - lo < 2) continue;
        std::array<std::pair<std::uint64_t, std::uint8_t>, kMaxOrder> sig{};
        for (int i = lo; i < hi; ++i) {
          std::uint64_t s = 0;
          for (int d = 0; d < cells; ++d) s = (s << 4) | static_cast<std::uint64_t>(std::popcount(static_cast<std::uint16_t>(g_.rows[p.lab[i]] & cell_mask[d])));
          sig[i - lo] = {s, p.lab[i]};
        }
        std::sort(sig.begin(), sig.begin() + (hi - lo));
        if (sig[0].first == sig[hi - lo - 1].first) continue;
        for (int i = lo; i < hi; ++i) {
          p.lab[i] = sig[i - lo].second;
          if (i > lo && sig[i - lo].first != sig[i - lo - 1].first) p.starts[i] = true;
        }
        changed = true;
      }
    }
  }

  std::uint64_t leaf_code(const Partition& p) const {
    std::uint64_t c = 0;
    for (int j = 1; j < n_; ++j) {
      for (int i = 0; i < j; ++i) c = (c << 1) | static_cast<std::uint64_t>(g_.adjacent(p.lab[i], p.lab[j]));
    }
    return c;
  }

  std::uint8_t find(std::uint8_t x) {
    while (orbit_parent_[x] != x) x = orbit_parent_[x] = orbit_parent_[orbit_parent_[x]];
    return x;
  }

  void record_automorphism(const Perm& from, const Perm& to) {
    Perm gamma{};
    for (int i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    generators_.push_back(gamma);
    for (int v = 0; v < n_; ++v) {
      std::uint8_t a = find(static_cast<std::uint8_t>(v));
      std::uint8_t b = find(gamma[v]);
      if (a != b) orbit_parent_[std::max(a, b)] = std::min(a, b);
    }
  }

  static std::size_t common_prefix(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return k;
  }

  // Returns the depth the search should unwind to; SIZE_MAX means carry on.
  std::size_t search(Partition p) {
    refine(p);
    int target = -1;
    int target_end = n_;
    for (int i = 0; i < n_; ++i) {
      if (!p.starts[i]) continue;
      int j = i + 1;
      while (!p.starts[j]) ++j;
      if (j - i > 1) {
        target = i;
        target_end = j;
        break;
      }
    }
    if (target < 0) return at_leaf(p);

    const std::size_t depth = path_.size();
    std::vector<std::uint8_t> cell(p.lab.begin() + target, p.lab.begin() + target_end);
    std::sort(cell.begin(), cell.end());
    std::vector<std::uint8_t> tried;
    for (std::uint8_t w : cell) {
      if (!tried.empty() && equivalent_to_tried(w, tried)) continue;
      tried.push_back(w);
      Partition child = p;
      auto pos = std::find(child.lab.begin() + target, child.lab.begin() + target_end, w);
      std::rotate(child.lab.begin() + target, pos, pos + 1);
      child.starts[target + 1] = true;
      path_.push_back(w);
      const std::size_t back = search(child);
      path_.pop_back();
      if (back < depth) return back;
    }
    return SIZE_MAX;
  }

  // w is pruned when some generator fixing the current path pointwise joins it to a tried vertex.
  bool equivalent_to_tried(std::uint8_t w, const std::vector<std::uint8_t>& tried) const {
    std::array<std::uint8_t, kMaxOrder> parent{};
    std::iota(parent.begin(), parent.end(), std::uint8_t{0});
    auto root = [&](std::uint8_t x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    for (const Perm& gamma : generators_) {
      bool fixes = std::all_of(path_.begin(), path_.end(), [&](std::uint8_t v) { return gamma[v] == v; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        std::uint8_t a = root(static_cast<std::uint8_t>(v));
        std::uint8_t b = root(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    const std::uint8_t rw = root(w);
    return std::any_of(tried.begin(), tried.end(), [&](std::uint8_t t) { return root(t) == rw; });
  }

  std::size_t at_leaf(const Partition& p) {
    const std::uint64_t code = leaf_code(p);
    if (!have_leaf_) {
      have_leaf_ = true;
      first_lab_ = best_lab_ = p.lab;
      first_code_ = best_code_ = code;
      first_path_ = best_path_ = path_;
      return SIZE_MAX;
    }
    if (code == first_code_) {
      record_automorphism(first_lab_, p.lab);
      return common_prefix(path_, first_path_);
    }
    if (code == best_code_) {
      record_automorphism(best_lab_, p.lab);
      return common_prefix(path_, best_path_);
    }
    if (code > best_code_) {
      best_code_ = code;
      best_lab_ = p.lab;
      best_path_ = path_;
    }
    return SIZE_MAX;
  }

  const SmallGraph& g_;
  int n_;
  bool have_leaf_ = false;
  Perm first_lab_{};
  Perm best_lab_{};
  std::uint64_t first_code_ = 0;
  std::uint64_t best_code_ = 0;
  std::vector<std::uint8_t> path_;
  std::vector<std::uint8_t> first_path_;
  std::vector<std::uint8_t> best_path_;
  std::vector<Perm> generators_;
  Perm orbit_parent_{};
};

}  // namespace

Canonical canonical_form(const SmallGraph& g) {
  if (g.n < 0 || g.n > kMaxOrder) throw std::invalid_argument("canonical_form: order out of range");
  if (g.n == 0) return Canonical{};
  return Searcher(g).run();
}

}  // namespace rankbound::hunt
