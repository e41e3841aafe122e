#pragma once

#include "rankbound/graph/graph.hpp"
#include "rankbound/io/graph6.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace rankbound::io {

/// Header "n m", then m lines "u v" with 0-based vertices. Blank lines and
/// anything after '#' are ignored. Loops, repeated edges, out-of-range
/// vertices and a wrong edge count are ParseErrors.
graph::Graph parse_edge_list(std::string_view text);
graph::Graph read_edge_list(std::istream& in);

std::string to_edge_list(const graph::Graph& g);

}  // namespace rankbound::io
