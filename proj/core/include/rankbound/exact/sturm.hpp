#pragma once

#include "rankbound/exact/polynomial.hpp"

#include <optional>
#include <vector>

namespace rankbound::exact {

/// Sturm sequence of the square-free part of a polynomial.
///
/// The chain is p0 = p / gcd(p, p'), p1 = p0', p_{i+1} = -rem(p_{i-1}, p_i),
/// each term scaled by a positive constant (which leaves every sign intact).
/// For any x < y, the number of distinct real roots in (x, y] equals
/// variations(x) - variations(y).
class SturmChain {
 public:
  /// Throws std::domain_error for the zero polynomial.
  explicit SturmChain(const RationalPolynomial& p);

  const std::vector<RationalPolynomial>& chain() const { return chain_; }
  const RationalPolynomial& square_free() const { return chain_.front(); }

  std::size_t variations(const BigRational& x) const;
  std::size_t variations(const QSqrt2& x) const;
  std::size_t variations_at_pos_infinity() const;
  std::size_t variations_at_neg_infinity() const;

  /// Distinct real roots in the half-open interval (lo, hi].
  std::size_t count_roots(const BigRational& lo, const BigRational& hi) const;
  /// Distinct real roots strictly greater than x.
  std::size_t count_roots_above(const BigRational& x) const;
  std::size_t count_roots_above(const QSqrt2& x) const;
  std::size_t count_real_roots() const;

 private:
  std::vector<RationalPolynomial> chain_;
};

/// Half-open interval (lo, hi] known to hold exactly one root of `chain`'s polynomial.
class IsolatedRoot {
 public:
  IsolatedRoot(SturmChain chain, BigRational lo, BigRational hi);

  const BigRational& lo() const { return lo_; }
  const BigRational& hi() const { return hi_; }
  BigRational width() const { return hi_ - lo_; }
  /// The root itself when bisection landed on it exactly.
  const std::optional<BigRational>& exact_value() const { return exact_; }

  /// Bisects with rational midpoints until hi - lo <= width.
  void refine_to(const BigRational& width);

  /// Exact comparison of x against the root (-1, 0, +1 for x below, at, above).
  int compare(const QSqrt2& x) const;
  int compare(const BigRational& x) const { return compare(QSqrt2(x)); }

 private:
  SturmChain chain_;
  BigRational lo_;
  BigRational hi_;
  std::optional<BigRational> exact_;
};

/// Isolates the largest real root of p, refined to width <= 2^-64.
/// Throws std::domain_error if p is constant, has no real root, or its largest
/// real root lies outside (-1, 1].
IsolatedRoot largest_zero(const RationalPolynomial& p);

/// Isolates the largest real root of p without a range restriction.
/// Throws std::domain_error if p has no real root.
IsolatedRoot largest_real_root(const RationalPolynomial& p);

/// 1 + max |a_i / a_n|: every real root lies strictly inside (-bound, bound).
BigRational cauchy_root_bound(const RationalPolynomial& p);

}  // namespace rankbound::exact
