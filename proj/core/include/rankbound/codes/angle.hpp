#pragma once

#include "rankbound/exact/qsqrt2.hpp"

namespace rankbound::codes {

using exact::QSqrt2;

/// The angle data of Rankin's acute case, carried as exact squares.
///
/// With s = cos(phi) and alpha = asin(sqrt(2) sin(phi/2)):
/// 2 sin^2(phi/2) = 1 - s, sin^2(alpha) = 1 - s, cos^2(alpha) = s and
/// tan^2(alpha) = (1 - s) / s.
struct AngleParams {
  int n = 0;
  QSqrt2 s;
  QSqrt2 two_sin_sq_half;
  QSqrt2 sin_sq_alpha;
  QSqrt2 tan_sq_alpha;

  QSqrt2 cos_sq_alpha() const { return QSqrt2(1) - sin_sq_alpha; }
};

/// Requires n >= 2 and 0 < s < 1 (an acute angle); throws std::invalid_argument otherwise.
AngleParams make_angle_params(int n, const QSqrt2& s);

/// 5 * 2^((n + offset)/2) - 2, exactly.
QSqrt2 code_threshold(int n, int exponent_offset);

}  // namespace rankbound::codes
