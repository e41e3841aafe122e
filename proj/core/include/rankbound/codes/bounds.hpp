#pragma once

#include "rankbound/codes/angle.hpp"
#include "rankbound/exact/gamma.hpp"
#include "rankbound/exact/gegenbauer.hpp"

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace rankbound::codes {

enum class Method { rankin_half_pi, rankin_obtuse, rankin_integral, closed_form, levenshtein };

std::string_view to_string(Method m);

/// Outcome of one upper-bound evaluation for M(n, phi).
///
/// `value` is the bound itself when `value_exact`, otherwise a certified upper
/// bound on it. `holds` is present exactly when a threshold is, and records
/// value < threshold decided without rounding.
struct BoundReport {
  int n = 0;
  Method method = Method::levenshtein;
  QSqrt2 value;
  bool value_exact = true;
  std::optional<QSqrt2> threshold;
  std::optional<bool> holds;
  std::optional<int> k;
  std::optional<exact::Branch> branch;
};

struct HalfPi {};
struct Obtuse {};
struct Acute {
  AngleParams params;
};
using AngleCase = std::variant<HalfPi, Obtuse, Acute>;

/// Two-sided bound on I = int_0^alpha sin^(n-2)(t) (cos t - cos alpha) dt:
/// I = sin^(n+1)(alpha) / ((n^2-1) cos^2(alpha)) * (1 - 3 xi tan^2(alpha) / (n+3))
/// for some xi in [0, 1]. Endpoints are kept squared so they stay in Q(sqrt2).
struct IntegralBracket {
  int n = 0;
  QSqrt2 hi_squared;  ///< xi = 0 endpoint, squared
  QSqrt2 lo_factor;   ///< 1 - 3 tan^2(alpha) / (n+3); lo = hi * lo_factor

  QSqrt2 lo_squared() const { return hi_squared * lo_factor * lo_factor; }
  /// hi / lo, exact.
  QSqrt2 ratio() const { return QSqrt2(1) / lo_factor; }
  exact::BigRational lo_lower() const;
  exact::BigRational hi_upper() const;
};

/// Requires n >= 6 and n > 6 tan^2(alpha) - 3; throws std::invalid_argument otherwise.
IntegralBracket integral_bracket(int n, const AngleParams& params);

/// Rankin: 2n at phi = pi/2, n+1 for obtuse phi, and for acute phi the integral
/// formula with I replaced by the bracket's lower end, rounded up once to a rational.
BoundReport rankin_bound(int n, const AngleCase& angle, std::optional<QSqrt2> threshold = std::nullopt);

/// (n^2 - 1) / sin^n(alpha). The verdict squares both sides in Q(sqrt2).
/// Requires n > max{6 tan^2(alpha) - 3, 5}, and n > 25 when s = sqrt2 - 1.
BoundReport closed_form_bound(int n, const AngleParams& params, std::optional<QSqrt2> threshold = std::nullopt);

/// Levenshtein's bound at s = cos(phi), evaluated exactly in Q(sqrt2).
/// Throws std::invalid_argument unless n >= 3 and -1 <= s < 1, and
/// std::domain_error when the formula's Q-denominator vanishes at s.
BoundReport levenshtein_bound(int n, const QSqrt2& s, std::optional<QSqrt2> threshold = std::nullopt);
BoundReport levenshtein_bound(exact::GegenbauerFamily& family, const QSqrt2& s,
                              std::optional<QSqrt2> threshold = std::nullopt);

}  // namespace rankbound::codes
