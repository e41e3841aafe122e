#pragma once

// Independent numeric and combinatorial references for the unit tests.
// None of these go through the library's exact machinery beyond reading its
// inputs.

#include "rankbound/exact/qsqrt2.hpp"
#include "rankbound/graph/graph.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

using Float50 = boost::multiprecision::cpp_bin_float_50;
using Dec100 = boost::multiprecision::cpp_dec_float_100;
using Rational = boost::multiprecision::cpp_rational;

inline Rational to_cpp_rational(const rankbound::exact::BigRational& q) {
  return Rational(boost::multiprecision::cpp_int(q.get_num().get_str()),
                  boost::multiprecision::cpp_int(q.get_den().get_str()));
}

template <class F>
F to_float(const rankbound::exact::BigRational& q) {
  return F(boost::multiprecision::cpp_int(q.get_num().get_str())) / F(boost::multiprecision::cpp_int(q.get_den().get_str()));
}

template <class F>
F to_float(const rankbound::exact::QSqrt2& x) {
  return to_float<F>(x.rational_part()) + to_float<F>(x.sqrt2_part()) * sqrt(F(2));
}

/// Rank by Gaussian elimination over cpp_rational.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::size_t rational_rank(const rankbound::graph::Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) m[u][v] = g.adjacent(u, v) ? 1 : 0;
  }
  return rational_rank(std::move(m));
}

/// Rank modulo a prime p < 2^31.
inline std::size_t mod_p_rank(const rankbound::graph::Graph& g, std::uint64_t p) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) m[u][v] = g.adjacent(u, v) ? 1 : 0;
  }
  auto inv = [p](std::uint64_t a) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < n; ++c) {
    std::size_t piv = rank;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[rank]);
    const std::uint64_t iv = inv(m[rank][c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const std::uint64_t f = m[r][c] * iv % p;
      for (std::size_t k = c; k < n; ++k) m[r][k] = (m[r][k] + p - f * m[rank][k] % p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracle
