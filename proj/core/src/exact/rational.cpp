#include "rankbound/exact/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace rankbound::exact {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigRational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(BigInt(std::to_string(num)), BigInt(std::to_string(den)));
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  std::string text(s);
  if (!text.empty() && text[0] == '+') text.erase(0, 1);
  return BigInt(text, 10);
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text)) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    return BigRational(parse_integer(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  const BigInt d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
  return make_rational(parse_integer(num), d);
}

std::string to_string(const BigRational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

BigRational pow2(long exponent) {
  BigInt p;
  const unsigned long e = exponent >= 0 ? static_cast<unsigned long>(exponent) : static_cast<unsigned long>(-exponent);
  mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
  if (exponent >= 0) return BigRational(p);
  return make_rational(BigInt(1), p);
}

BigRational pow(const BigRational& base, unsigned long exponent) {
  BigRational result(1);
  BigRational b = base;
  while (exponent > 0) {
    if (exponent & 1UL) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

BigInt ceil(const BigRational& value) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

BigInt floor(const BigRational& value) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

namespace {

// floor(sqrt(value) * 2^bits) as an integer.
BigInt scaled_isqrt(const BigRational& value, unsigned bits) {
  if (value < 0) throw std::domain_error("square root of a negative rational");
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, 2UL * bits);
  const BigInt radicand = floor(value * BigRational(scale));
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
  return root;
}

unsigned working_bits(const BigRational& value, unsigned precision_bits) {
  // Relative accuracy needs headroom below 1 for small values.
  const long num_bits = static_cast<long>(mpz_sizeinbase(value.get_num_mpz_t(), 2));
  const long den_bits = static_cast<long>(mpz_sizeinbase(value.get_den_mpz_t(), 2));
  const long deficit = den_bits - num_bits;
  return precision_bits + 2 + static_cast<unsigned>(deficit > 0 ? (deficit + 1) / 2 + 1 : 0);
}

}  // namespace

BigRational sqrt_upper(const BigRational& value, unsigned precision_bits) {
  if (value == 0) return BigRational(0);
  const unsigned bits = working_bits(value, precision_bits);
  BigInt root = scaled_isqrt(value, bits);
  const BigRational candidate = make_rational(root, BigInt(1) << bits);
  if (candidate * candidate == value) return candidate;
  root += 1;  // floor(sqrt(floor(v * 4^b))) + 1 > sqrt(v) * 2^b
  return make_rational(root, BigInt(1) << bits);
}

BigRational sqrt_lower(const BigRational& value, unsigned precision_bits) {
  if (value == 0) return BigRational(0);
  const unsigned bits = working_bits(value, precision_bits);
  return make_rational(scaled_isqrt(value, bits), BigInt(1) << bits);
}

namespace {

BigInt pow10(long e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return p;
}

BigRational pow10_rational(long e) {
  if (e >= 0) return BigRational(pow10(e));
  return make_rational(BigInt(1), pow10(-e));
}

// floor(log10(x)) for x > 0.
long decimal_exponent(const BigRational& x) {
  long e = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 10));
  while (pow10_rational(e) > x) --e;
  while (pow10_rational(e + 1) <= x) ++e;
  return e;
}

std::string strip_fraction_zeros(std::string s) {
  if (s.find('.') == std::string::npos) return s;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

std::string to_decimal_upper(const BigRational& value, int digits) {
  if (digits < 1) throw std::invalid_argument("digit count must be positive");
  if (value == 0) return "0";
  const bool negative = value < 0;
  const BigRational magnitude = negative ? BigRational(-value) : value;
  long e = decimal_exponent(magnitude);

  BigInt mantissa;
  for (;;) {
    const BigRational scaled = value * pow10_rational(digits - 1 - e);
    mantissa = ceil(scaled);  // toward +infinity, for either sign
    BigInt abs_m = abs(mantissa);
    if (abs_m >= pow10(digits)) {
      ++e;
      continue;
    }
    break;
  }
  // |value| >= 10^e keeps |mantissa| >= 10^(digits-1), so m has exactly `digits` digits.
  const std::string m = BigInt(abs(mantissa)).get_str();

  std::string out = negative ? "-" : "";
  if (e >= -6 && e < 30) {
    if (e >= 0) {
      const auto int_len = static_cast<std::size_t>(e + 1);
      if (int_len >= m.size()) {
        out += m + std::string(int_len - m.size(), '0');
      } else {
        out += strip_fraction_zeros(m.substr(0, int_len) + "." + m.substr(int_len));
      }
    } else {
      out += strip_fraction_zeros("0." + std::string(static_cast<std::size_t>(-e - 1), '0') + m);
    }
    return out;
  }
  out += strip_fraction_zeros(m.substr(0, 1) + "." + m.substr(1));
  out += (e < 0 ? "e-" : "e+") + std::to_string(e < 0 ? -e : e);
  return out;
}

}  // namespace rankbound::exact
