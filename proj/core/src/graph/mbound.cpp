#include "rankbound/graph/mbound.hpp"

#include <stdexcept>
#include <string>

namespace rankbound::graph {

std::uint64_t m_bound(int r, BoundVariant variant) {
  if (r < 2 || r > kMaxBoundRank) {
    throw std::invalid_argument("m(r) is defined here for 2 <= r <= " + std::to_string(kMaxBoundRank) +
                                ", got r = " + std::to_string(r));
  }
  const std::uint64_t m = (r % 2 == 0) ? (std::uint64_t{1} << ((r + 2) / 2)) - 2
                                       : 5 * (std::uint64_t{1} << ((r - 3) / 2)) - 2;
  return variant == BoundVariant::m ? m : 8 * m + 14;
}

}  // namespace rankbound::graph
