#pragma once

#include "rankbound/exact/rational.hpp"

#include <compare>
#include <string>
#include <string_view>

namespace rankbound::exact {

/// An element a + b*sqrt(2) of the quadratic field Q(sqrt 2).
///
/// Every comparison is exact: the sign of a + b*sqrt(2) is decided from the
/// signs of a and b and, when they disagree, by comparing a^2 with 2*b^2.
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(BigRational a, BigRational b = BigRational(0)) : a_(std::move(a)), b_(std::move(b)) {}  // NOLINT(google-explicit-constructor)
  QSqrt2(long a) : a_(a), b_(0) {}  // NOLINT(google-explicit-constructor)

  static QSqrt2 sqrt2() { return {BigRational(0), BigRational(1)}; }
  /// sqrt(2) - 1, the cosine of the angle produced by the +-1 row embedding.
  static QSqrt2 s0() { return {BigRational(-1), BigRational(1)}; }
  /// 2^(e/2) for any integer e.
  static QSqrt2 pow2_half(long e);

  const BigRational& rational_part() const { return a_; }
  const BigRational& sqrt2_part() const { return b_; }
  bool is_rational() const { return b_ == 0; }

  int sign() const;
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  /// a - b*sqrt(2).
  QSqrt2 conjugate() const { return {a_, -b_}; }
  /// Field norm a^2 - 2 b^2.
  BigRational norm() const { return a_ * a_ - 2 * b_ * b_; }
  QSqrt2 inverse() const;

  QSqrt2& operator+=(const QSqrt2& o);
  QSqrt2& operator-=(const QSqrt2& o);
  QSqrt2& operator*=(const QSqrt2& o);
  QSqrt2& operator/=(const QSqrt2& o);

  friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
  friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
  friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
  friend QSqrt2 operator/(QSqrt2 x, const QSqrt2& y) { return x /= y; }
  friend QSqrt2 operator-(const QSqrt2& x) { return {-x.a_, -x.b_}; }

  friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend std::strong_ordering operator<=>(const QSqrt2& x, const QSqrt2& y);

  /// Rational enclosure lower() <= value <= upper(), width about 2^-precision_bits relative.
  BigRational lower(unsigned precision_bits = 200) const;
  BigRational upper(unsigned precision_bits = 200) const;

  /// Exact text: "p/q", "r/s*sqrt2", or "p/q + r/s*sqrt2".
  std::string to_string() const;
  /// 30 significant digits (by default), rounded toward +infinity.
  std::string to_decimal_upper(int digits = 30) const;

  /// Inverse of to_string(); also accepts "sqrt2", "-sqrt2", "s0" and "b*sqrt2" with integer b.
  static QSqrt2 parse(std::string_view text);

 private:
  BigRational a_{0};
  BigRational b_{0};
};

QSqrt2 pow(const QSqrt2& base, unsigned long exponent);

}  // namespace rankbound::exact
