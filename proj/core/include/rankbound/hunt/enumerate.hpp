#pragma once

#include "rankbound/hunt/canonical.hpp"

#include <functional>
#include <vector>

namespace rankbound::hunt {

struct EnumerateOptions {
  bool reduced_only = false;
  unsigned threads = 1;
};

/// Calls `visit` once per isomorphism class of graphs on `order` vertices,
/// each in canonical form. Graphs of order n come from those of order n - 1 by
/// canonical augmentation; the visiting order is fixed (parent order, then new
/// neighbourhood as a bitmask) and does not depend on the thread count.
/// Throws std::invalid_argument for orders outside [0, kMaxOrder].
void for_each_graph(int order, const EnumerateOptions& options, const std::function<void(const SmallGraph&)>& visit);

std::vector<SmallGraph> enumerate_small(int order, const EnumerateOptions& options = {});

std::vector<graph::Graph> enumerate_graphs(int order, bool reduced_only, unsigned threads = 1);

}  // namespace rankbound::hunt
