#include "rankbound/io/graph6.hpp"

#include <istream>

namespace rankbound::io {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

graph::Graph parse_graph6(std::string_view text, std::size_t line) {
  std::size_t offset = 0;
  if (text.substr(0, kHeader.size()) == kHeader) offset = kHeader.size();
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);

  std::size_t pos = offset;
  auto next_byte = [&](const char* what) -> unsigned {
    if (pos >= text.size()) throw ParseError(line, pos + 1, std::string("unexpected end of line in ") + what);
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw ParseError(line, pos + 1, "byte " + std::to_string(c) + " is outside the graph6 range 63..126");
    ++pos;
    return c - 63U;
  };

  if (pos >= text.size()) throw ParseError(line, pos + 1, "empty graph6 line");
  std::size_t n = 0;
  if (static_cast<unsigned char>(text[pos]) == 126) {
    ++pos;
    int groups = 3;
    if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126) {
      ++pos;
      groups = 6;
    }
    for (int i = 0; i < groups; ++i) n = (n << 6) | next_byte("order field");
  } else {
    n = next_byte("order field");
  }

  graph::Graph g(n);
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() - pos != body) {
    throw ParseError(line, pos + 1,
                     "expected " + std::to_string(body) + " adjacency bytes for order " + std::to_string(n) + ", found " +
                         std::to_string(text.size() - pos));
  }
  const std::size_t body_start = pos;
  unsigned group = 0;
  int left = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (left == 0) {
        group = next_byte("adjacency data");
        left = 6;
      }
      --left;
      if ((group >> left) & 1U) g.add_edge(i, j);
    }
  }
  if (left > 0 && (group & ((1U << left) - 1U)) != 0) {
    throw ParseError(line, body_start + body, "padding bits must be zero");
  }
  return g;
}

std::string to_graph6(const graph::Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63U)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63U)));
  }
  unsigned group = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
  return out;
}

void read_graph6_stream(std::istream& in, const std::function<void(const graph::Graph&)>& visit) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    visit(parse_graph6(line, line_no));
  }
}

std::vector<graph::Graph> read_graph6_all(std::istream& in) {
  std::vector<graph::Graph> out;
  read_graph6_stream(in, [&](const graph::Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace rankbound::io
