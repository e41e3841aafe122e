#pragma once

#include "rankbound/exact/rational.hpp"
#include "rankbound/graph/graph.hpp"

#include <cstddef>
#include <vector>

namespace rankbound::graph {

using IntegerMatrix = std::vector<std::vector<exact::BigInt>>;

/// Rank over Q of an integer matrix by fraction-free (Bareiss) elimination:
/// every division in the elimination is exact, so no rationals are formed.
std::size_t integer_rank(IntegerMatrix m);

/// Rank of A(G) over the reals (equivalently Q, since entries are integers).
///
/// Orders up to 32 run the same elimination on __int128: every intermediate
/// is a minor of a 0/1 matrix, bounded by Hadamard's (k+1)^((k+1)/2) / 2^k,
/// and the largest product formed stays below 2^104.
std::size_t rank(const Graph& g);

IntegerMatrix adjacency_matrix(const Graph& g);

/// The +-1 matrix obtained from A(G) by replacing every 0 (diagonal included) by -1.
IntegerMatrix sign_matrix(const Graph& g);

}  // namespace rankbound::graph
