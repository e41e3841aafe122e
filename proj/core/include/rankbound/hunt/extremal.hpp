#pragma once

#include "rankbound/graph/graph.hpp"

#include <stdexcept>
#include <string>

namespace rankbound::hunt {

/// The candidate construction produced a graph that is not reduced, or has
/// the wrong rank or order.
class ExtremalConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Doubles every vertex of g (twins are non-adjacent and share neighbours),
/// then adds adjacent vertices u, v with u joined to every original vertex and
/// v to every twin. Order 2|g| + 2.
graph::Graph doubling_step(const graph::Graph& g);

/// A reduced graph of rank r and order m(r), for 2 <= r <= 12.
/// Bases: K_2 (r = 2), K_3 (r = 3), the complement of the 3-cube (r = 5);
/// every other r applies doubling_step to the graph for r - 2. The result is
/// checked and ExtremalConstructionError is thrown if the check fails.
graph::Graph construct_extremal(int r);

}  // namespace rankbound::hunt
