#include "rankbound/codes/angle.hpp"

#include <stdexcept>

namespace rankbound::codes {

AngleParams make_angle_params(int n, const QSqrt2& s) {
  if (n < 2) throw std::invalid_argument("angle parameters need n >= 2");
  if (s <= QSqrt2(0) || s >= QSqrt2(1)) throw std::invalid_argument("acute angle parameters need 0 < cos(phi) < 1");
  AngleParams p;
  p.n = n;
  p.s = s;
  p.two_sin_sq_half = QSqrt2(1) - s;
  p.sin_sq_alpha = p.two_sin_sq_half;
  p.tan_sq_alpha = p.sin_sq_alpha / s;
  return p;
}

QSqrt2 code_threshold(int n, int exponent_offset) {
  return QSqrt2(5) * QSqrt2::pow2_half(static_cast<long>(n) + exponent_offset) - QSqrt2(2);
}

}  // namespace rankbound::codes
