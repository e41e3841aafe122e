#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace rankbound::exact {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Builds num/den in lowest terms. Throws std::domain_error when den == 0.
BigRational make_rational(const BigInt& num, const BigInt& den);
BigRational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
BigRational parse_rational(std::string_view text);

/// "p" when the denominator is one, otherwise "p/q".
std::string to_string(const BigRational& value);

/// 2^e for any integer e (negative exponents give 1/2^-e).
BigRational pow2(long exponent);

BigRational pow(const BigRational& base, unsigned long exponent);

/// Smallest integer >= value / largest integer <= value.
BigInt ceil(const BigRational& value);
BigInt floor(const BigRational& value);

/// A rational u with sqrt(value) <= u <= sqrt(value) * (1 + 2^-precision_bits).
/// Requires value >= 0.
BigRational sqrt_upper(const BigRational& value, unsigned precision_bits = 160);
/// A rational l with sqrt(value) * (1 - 2^-precision_bits) <= l <= sqrt(value).
BigRational sqrt_lower(const BigRational& value, unsigned precision_bits = 160);

/// Decimal rendering with `digits` significant digits, rounded toward +infinity.
/// Positional notation for magnitudes in [1e-6, 1e30), scientific otherwise.
std::string to_decimal_upper(const BigRational& value, int digits = 30);

}  // namespace rankbound::exact
