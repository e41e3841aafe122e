#pragma once

#include "rankbound/graph/graph.hpp"

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rankbound::io {

/// Malformed input, located by 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// One graph6 line, without the newline. An optional ">>graph6<<" prefix is accepted.
graph::Graph parse_graph6(std::string_view text, std::size_t line = 1);

std::string to_graph6(const graph::Graph& g);

/// Reads graph6 lines until end of stream; blank lines are skipped.
void read_graph6_stream(std::istream& in, const std::function<void(const graph::Graph&)>& visit);
std::vector<graph::Graph> read_graph6_all(std::istream& in);

}  // namespace rankbound::io
