#pragma once

#include "rankbound/exact/polynomial.hpp"
#include "rankbound/exact/qsqrt2.hpp"

#include <string_view>
#include <vector>

namespace rankbound::exact {

/// Q_k for dimension n, from Q_0 = 1, Q_1 = t and
/// Q_{k+1} = ((2k+n-2) t Q_k - k Q_{k-1}) / (k+n-2). Normalised so Q_k(1) = 1.
/// Throws std::invalid_argument for n < 2 or k < 0.
RationalPolynomial gegenbauer(int n, int k);

enum class AdjacentKind {
  k10,  ///< (n-1)(Q_k - Q_{k+1}) / ((2k+n-1)(1-t)), k >= 1
  k11,  ///< (n-1)(Q_k - Q_{k+2}) / ((2k+n)(1-t^2)),  k >= 0
};

/// Adjacent polynomial Q_k^{1,0} or Q_k^{1,1}. The division is exact; a
/// nonzero remainder throws std::logic_error. n >= 3.
RationalPolynomial adjacent_poly(int n, int k, AdjacentKind kind);

/// Lazily grown Q_0, Q_1, ... and adjacent polynomials for one dimension n.
/// Not thread-safe; each caller owns its own family.
class GegenbauerFamily {
 public:
  explicit GegenbauerFamily(int n);

  int dimension() const { return n_; }
  const RationalPolynomial& q(int k);
  const RationalPolynomial& adjacent(int k, AdjacentKind kind);

 private:
  int n_;
  std::vector<RationalPolynomial> q_;
  std::vector<RationalPolynomial> adj10_;  // index k (k = 0 unused)
  std::vector<RationalPolynomial> adj11_;
};

enum class Branch { A, B };

std::string_view to_string(Branch b);

struct IntervalLocation {
  int k = 0;
  Branch branch = Branch::A;
  friend bool operator==(const IntervalLocation&, const IntervalLocation&) = default;
};

/// The unique k >= 1 and branch with s in [t_{k-1}^{1,1}, t_k^{1,0}) (branch A)
/// or [t_k^{1,0}, t_k^{1,1}) (branch B), where t_k^{1,0}, t_k^{1,1} are the
/// largest zeros of the adjacent polynomials and t_0^{1,1} = -1.
/// Decided exactly with Sturm counts at s. Throws std::invalid_argument unless
/// n >= 3 and -1 <= s < 1.
IntervalLocation locate_interval(int n, const QSqrt2& s);
IntervalLocation locate_interval(GegenbauerFamily& family, const QSqrt2& s);

}  // namespace rankbound::exact
