#pragma once

#include "rankbound/exact/qsqrt2.hpp"
#include "rankbound/graph/graph.hpp"

#include <cstddef>
#include <vector>

namespace rankbound::codes {

/// The +-1 rows of a reduced graph viewed as a spherical code.
///
/// Row u has +1 at the neighbours of u and -1 elsewhere (diagonal included);
/// scaled by 1/sqrt(n) the rows are unit vectors, and rows u, v differ in
/// exactly |delta(u, v)| places.
struct CodeReport {
  std::size_t n = 0;
  std::size_t rank = 0;
  std::size_t sign_rank = 0;  ///< rank of the +-1 matrix, at most rank + 1
  std::size_t rho = 0;
  std::vector<std::vector<int>> signs;
  exact::BigRational max_inner_product;  ///< max over u != v of <x_u, x_v>
  graph::Vertex arg_u = 0;
  graph::Vertex arg_v = 0;
  exact::BigRational rho_bound;  ///< (n - 2 rho) / n
  bool bound_holds = false;      ///< max_inner_product <= rho_bound
  bool sign_rank_ok = false;
  /// rho >= n/2 forces pairwise angles >= pi/2, hence n <= 2 sign_rank.
  bool half_applicable = false;
  bool half_holds = true;
  /// rho >= (1 - 1/sqrt2) n forces max_inner_product <= sqrt2 - 1.
  bool s0_applicable = false;
  bool s0_holds = true;

  bool all_hold() const { return bound_holds && sign_rank_ok && half_holds && s0_holds; }
};

/// Requires a reduced graph on at least two vertices; throws std::invalid_argument otherwise.
CodeReport graph_to_code(const graph::Graph& g);

}  // namespace rankbound::codes
