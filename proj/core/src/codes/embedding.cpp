#include "rankbound/codes/embedding.hpp"

#include "rankbound/graph/invariants.hpp"
#include "rankbound/graph/rank.hpp"

#include <stdexcept>

namespace rankbound::codes {

using exact::BigRational;
using exact::QSqrt2;

CodeReport graph_to_code(const graph::Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("graph_to_code needs at least two vertices");
  if (!graph::is_reduced(g)) throw std::invalid_argument("graph_to_code requires a reduced graph");

  CodeReport c;
  const std::size_t n = g.order();
  c.n = n;
  c.rank = graph::rank(g);
  c.sign_rank = graph::integer_rank(graph::sign_matrix(g));
  c.sign_rank_ok = c.sign_rank <= c.rank + 1;
  c.rho = graph::rho(g);

  c.signs.assign(n, std::vector<int>(n, -1));
  for (graph::Vertex u = 0; u < n; ++u) {
    for (graph::Vertex v = 0; v < n; ++v) {
      if (g.adjacent(u, v)) c.signs[u][v] = 1;
    }
  }

  long best = -static_cast<long>(n) - 1;
  for (graph::Vertex u = 0; u < n; ++u) {
    for (graph::Vertex v = u + 1; v < n; ++v) {
      long dot = 0;
      for (std::size_t i = 0; i < n; ++i) dot += c.signs[u][i] * c.signs[v][i];
      if (dot > best) {
        best = dot;
        c.arg_u = u;
        c.arg_v = v;
      }
    }
  }
  const long nn = static_cast<long>(n);
  const long rho = static_cast<long>(c.rho);
  c.max_inner_product = BigRational(best, nn);
  c.max_inner_product.canonicalize();
  c.rho_bound = BigRational(nn - 2 * rho, nn);
  c.rho_bound.canonicalize();
  c.bound_holds = c.max_inner_product <= c.rho_bound;

  c.half_applicable = 2 * rho >= nn;
  if (c.half_applicable) c.half_holds = c.max_inner_product <= 0 && n <= 2 * c.sign_rank;

  // rho >= (1 - 1/sqrt2) n  <=>  sqrt2 (n - rho) <= n
  c.s0_applicable = QSqrt2::sqrt2() * QSqrt2(nn - rho) <= QSqrt2(nn);
  if (c.s0_applicable) c.s0_holds = QSqrt2(c.max_inner_product) <= QSqrt2::s0();
  return c;
}

}  // namespace rankbound::codes
