#pragma once

#include "rankbound/codes/bounds.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace rankbound::codes {

/// Levenshtein's bound is used up to this dimension, the closed form above it.
inline constexpr int kClosedFormCrossover = 118;

/// One report per n in [n_lo, n_hi], ascending, each compared against
/// 5 * 2^((n + offset)/2) - 2 at s = sqrt2 - 1. `threads` > 1 splits the
/// range; the output does not depend on it.
std::vector<BoundReport> verify_code_lemma(int n_lo, int n_hi, int exponent_offset, unsigned threads = 1);

/// Tail argument for the closed form beyond the crossover.
///
/// With V_n the closed-form value and T_n the threshold, V_(n+1)/V_n = rho_n sqrt(1 + 1/sqrt2)
/// where rho_n = ((n+1)^2 - 1)/(n^2 - 1), while T_(n+1)/T_n > sqrt2. So once
/// V_start < T_start and rho_n^2 < 2/(1 + 1/sqrt2) = 4 - 2 sqrt2 for all n >= start,
/// V_n < T_n for all n >= start. rho_n is decreasing, so checking it at `start` is enough;
/// the window is checked term by term as well.
struct TailCertificate {
  int start = 0;
  int window_end = 0;
  int exponent_offset = 0;
  bool start_holds = false;         ///< V_start^2 < T_start^2
  bool ratio_bound_at_start = false;  ///< rho_start^2 < 4 - 2 sqrt2
  bool ratio_decreasing = false;    ///< rho_(n+1) < rho_n throughout the window
  bool threshold_ratio_ok = false;  ///< T_(n+1) > sqrt2 T_n throughout the window
  std::size_t window_checked = 0;
  std::optional<int> first_window_failure;  ///< first n in the window with V_n >= T_n

  bool valid() const {
    return start_holds && ratio_bound_at_start && ratio_decreasing && threshold_ratio_ok && !first_window_failure;
  }
};

TailCertificate tail_certificate(int start, int window_end, int exponent_offset);

}  // namespace rankbound::codes
