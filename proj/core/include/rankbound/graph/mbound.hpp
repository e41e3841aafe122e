#pragma once

#include <cstdint>
#include <string_view>

namespace rankbound::graph {

enum class BoundVariant {
  m,        ///< conjectured maximum order of a reduced rank-r graph
  m_prime,  ///< 8 m(r) + 14
};

/// Largest rank for which m'(r) fits in 64 bits.
inline constexpr int kMaxBoundRank = 116;

/// m(r) = 2^((r+2)/2) - 2 for even r, 5 * 2^((r-3)/2) - 2 for odd r; m'(r) = 8 m(r) + 14.
/// Throws std::invalid_argument unless 2 <= r <= kMaxBoundRank.
std::uint64_t m_bound(int r, BoundVariant variant = BoundVariant::m);

inline std::uint64_t m_of(int r) { return m_bound(r, BoundVariant::m); }
inline std::uint64_t m_prime_of(int r) { return m_bound(r, BoundVariant::m_prime); }

}  // namespace rankbound::graph
