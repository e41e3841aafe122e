#include "rankbound/io/edge_list.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <optional>
#include <sstream>
#include <vector>

namespace rankbound::io {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::size_t to_number(const Token& t, std::size_t line) {
  std::size_t value = 0;
  const char* end = t.text.data() + t.text.size();
  auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, t.column, "expected a non-negative integer, found '" + std::string(t.text) + "'");
  }
  return value;
}

}  // namespace

graph::Graph parse_edge_list(std::string_view text) {
  std::optional<graph::Graph> g;
  std::size_t expected = 0;
  std::size_t seen = 0;
  std::size_t line_no = 0;
  std::size_t last_line = 1;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    last_line = line_no;
    if (tokens.size() != 2) {
      const Token& bad = tokens.size() > 2 ? tokens[2] : tokens[0];
      throw ParseError(line_no, bad.column, "expected exactly two integers on the line");
    }
    const std::size_t a = to_number(tokens[0], line_no);
    const std::size_t b = to_number(tokens[1], line_no);
    if (!g) {
      g.emplace(a);
      expected = b;
      continue;
    }
    if (a >= g->order()) throw ParseError(line_no, tokens[0].column, "vertex " + std::to_string(a) + " out of range");
    if (b >= g->order()) throw ParseError(line_no, tokens[1].column, "vertex " + std::to_string(b) + " out of range");
    if (a == b) throw ParseError(line_no, tokens[0].column, "loops are not allowed");
    if (g->adjacent(a, b)) throw ParseError(line_no, tokens[0].column, "repeated edge");
    if (seen == expected) throw ParseError(line_no, 1, "more edges than the header's " + std::to_string(expected));
    g->add_edge(a, b);
    ++seen;
  }
  if (!g) throw ParseError(1, 1, "missing \"n m\" header");
  if (seen != expected) {
    throw ParseError(last_line, 1, "header declares " + std::to_string(expected) + " edges, found " + std::to_string(seen));
  }
  return *g;
}

graph::Graph read_edge_list(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_edge_list(text);
}

std::string to_edge_list(const graph::Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace rankbound::io
