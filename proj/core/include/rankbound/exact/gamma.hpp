#pragma once

#include "rankbound/exact/rational.hpp"

#include <string>

namespace rankbound::exact {

/// q * pi^(e/2). Products and quotients add and subtract the pi exponent.
struct GammaRatio {
  BigRational q{1};
  int pi_half_power = 0;

  GammaRatio& operator*=(const GammaRatio& o);
  GammaRatio& operator/=(const GammaRatio& o);
  friend GammaRatio operator*(GammaRatio a, const GammaRatio& b) { return a *= b; }
  friend GammaRatio operator/(GammaRatio a, const GammaRatio& b) { return a /= b; }
  friend bool operator==(const GammaRatio&, const GammaRatio&) = default;

  /// (q * pi^(e/2))^2 = q^2 * pi^e, enclosed with the certified rational pi bounds.
  BigRational square_upper() const;
  BigRational square_lower() const;

  std::string to_string() const;
};

/// Gamma(m/2) for m >= 1: (m/2 - 1)! for even m, (2k)! sqrt(pi) / (4^k k!) for m = 2k+1.
GammaRatio gamma_half_integer(int twice_argument);

/// sqrt(pi) Gamma((n-1)/2) / (2 Gamma(n/2)) exactly. Throws std::invalid_argument for n < 2.
GammaRatio gamma_half_ratio(int n);

/// Rational bounds pi_lower() < pi < pi_upper(), 38 decimals.
const BigRational& pi_lower();
const BigRational& pi_upper();

}  // namespace rankbound::exact
