#include "rankbound/graph/rank.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace rankbound::graph {

namespace {

__extension__ typedef __int128 Int128;

constexpr std::size_t kInt128MaxOrder = 32;

// Row-echelon Bareiss elimination that skips pivot-free columns. Entries after
// step k are (k+1)-minors of the input, so the division by the previous pivot
// is exact.
template <typename Int, typename Rows>
std::size_t bareiss_rank(Rows& m, std::size_t rows, std::size_t cols) {
  std::size_t r = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) std::swap(m[pivot], m[r]);
    const Int p = m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Int lead = m[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (p * m[i][j] - lead * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = p;
    ++r;
  }
  return r;
}

}  // namespace

std::size_t integer_rank(IntegerMatrix m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m.front().size();
  for (const auto& row : m) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
  }
  return bareiss_rank<exact::BigInt>(m, rows, cols);
}

IntegerMatrix adjacency_matrix(const Graph& g) {
  const std::size_t n = g.order();
  IntegerMatrix m(n, std::vector<exact::BigInt>(n, 0));
  for (Vertex u = 0; u < n; ++u) {
    const auto& row = g.neighbors(u);
    for (auto v = row.find_first(); v != VertexSet::npos; v = row.find_next(v)) m[u][v] = 1;
  }
  return m;
}

IntegerMatrix sign_matrix(const Graph& g) {
  const std::size_t n = g.order();
  IntegerMatrix m(n, std::vector<exact::BigInt>(n, -1));
  for (Vertex u = 0; u < n; ++u) {
    const auto& row = g.neighbors(u);
    for (auto v = row.find_first(); v != VertexSet::npos; v = row.find_next(v)) m[u][v] = 1;
  }
  return m;
}

std::size_t rank(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return 0;
  if (n <= kInt128MaxOrder) {
    std::array<std::array<Int128, kInt128MaxOrder>, kInt128MaxOrder> m{};
    for (Vertex u = 0; u < n; ++u) {
      const auto& row = g.neighbors(u);
      for (auto v = row.find_first(); v != VertexSet::npos; v = row.find_next(v)) m[u][v] = 1;
    }
    return bareiss_rank<Int128>(m, n, n);
  }
  return integer_rank(adjacency_matrix(g));
}

}  // namespace rankbound::graph
