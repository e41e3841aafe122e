#pragma once

#include "rankbound/exact/qsqrt2.hpp"
#include "rankbound/exact/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace rankbound::exact {

/// Dense univariate polynomial with rational coefficients, ascending degree.
/// The leading coefficient is nonzero unless the polynomial is zero.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<BigRational> coefficients);
  RationalPolynomial(std::initializer_list<BigRational> coefficients);

  static RationalPolynomial constant(BigRational c);
  /// The monomial t.
  static RationalPolynomial identity();
  /// The linear polynomial (t - root).
  static RationalPolynomial linear_factor(const BigRational& root);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigRational>& coefficients() const { return coeffs_; }
  /// Coefficient of t^i (zero past the degree).
  BigRational coefficient(std::size_t i) const;
  const BigRational& leading() const;

  BigRational evaluate(const BigRational& x) const;
  QSqrt2 evaluate(const QSqrt2& x) const;
  int sign_at(const BigRational& x) const;
  int sign_at(const QSqrt2& x) const;

  RationalPolynomial derivative() const;
  /// p(-t).
  RationalPolynomial reflected() const;
  /// Divides by the leading coefficient; the zero polynomial is returned unchanged.
  RationalPolynomial monic() const;

  RationalPolynomial& operator+=(const RationalPolynomial& o);
  RationalPolynomial& operator-=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const BigRational& c);

  friend RationalPolynomial operator+(RationalPolynomial p, const RationalPolynomial& q) { return p += q; }
  friend RationalPolynomial operator-(RationalPolynomial p, const RationalPolynomial& q) { return p -= q; }
  friend RationalPolynomial operator*(RationalPolynomial p, const RationalPolynomial& q) { return p *= q; }
  friend RationalPolynomial operator*(RationalPolynomial p, const BigRational& c) { return p *= c; }
  friend RationalPolynomial operator*(const BigRational& c, RationalPolynomial p) { return p *= c; }
  friend RationalPolynomial operator-(RationalPolynomial p) { return p *= BigRational(-1); }
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  /// Euclidean division: returns (quotient, remainder) with deg(remainder) < deg(divisor).
  /// Throws std::domain_error when the divisor is zero.
  std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& divisor) const;

  /// Exact rational text, highest degree first: "15/14*t^2 + 1/7*t - 1/14".
  std::string to_string(char variable = 't') const;
  /// Same layout with each coefficient rendered to `digits` significant decimals.
  std::string to_decimal_string(int digits = 30, char variable = 't') const;

 private:
  void normalize();
  std::vector<BigRational> coeffs_;
};

/// Monic greatest common divisor (zero when both inputs are zero).
RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);

}  // namespace rankbound::exact
