#include "rankbound/exact/qsqrt2.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace rankbound::exact {

namespace {

int sgn(const BigRational& q) { return q < 0 ? -1 : (q > 0 ? 1 : 0); }

}  // namespace

QSqrt2 QSqrt2::pow2_half(long e) {
  // 2^(e/2) = 2^floor(e/2) * sqrt2^(e mod 2)
  const long half = e >= 0 ? e / 2 : -((-e + 1) / 2);
  const bool odd = (e - 2 * half) != 0;
  if (odd) return {BigRational(0), pow2(half)};
  return {pow2(half), BigRational(0)};
}

int QSqrt2::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // a and b have opposite signs: the larger of a^2 and 2 b^2 wins.
  const BigRational a2 = a_ * a_;
  const BigRational b2 = 2 * b_ * b_;
  if (a2 > b2) return sa;
  if (a2 < b2) return sb;
  return 0;  // unreachable for rational a, b: sqrt(2) is irrational
}

QSqrt2 QSqrt2::inverse() const {
  const BigRational n = norm();
  if (n == 0) throw std::domain_error("division by zero in Q(sqrt2)");
  return {a_ / n, -b_ / n};
}

QSqrt2& QSqrt2::operator+=(const QSqrt2& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
  BigRational a = a_ * o.a_ + 2 * b_ * o.b_;
  BigRational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QSqrt2& QSqrt2::operator/=(const QSqrt2& o) {
  if (o.b_ == 0) {
    if (o.a_ == 0) throw std::domain_error("division by zero in Q(sqrt2)");
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

std::strong_ordering operator<=>(const QSqrt2& x, const QSqrt2& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

QSqrt2 pow(const QSqrt2& base, unsigned long exponent) {
  QSqrt2 result(1);
  QSqrt2 b = base;
  while (exponent > 0) {
    if (exponent & 1UL) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

BigRational QSqrt2::lower(unsigned precision_bits) const {
  if (b_ == 0) return a_;
  const BigRational r = b_ > 0 ? sqrt_lower(BigRational(2), precision_bits) : sqrt_upper(BigRational(2), precision_bits);
  return a_ + b_ * r;
}

BigRational QSqrt2::upper(unsigned precision_bits) const {
  if (b_ == 0) return a_;
  const BigRational r = b_ > 0 ? sqrt_upper(BigRational(2), precision_bits) : sqrt_lower(BigRational(2), precision_bits);
  return a_ + b_ * r;
}

std::string QSqrt2::to_string() const {
  if (b_ == 0) return exact::to_string(a_);
  const std::string coeff = (b_ == 1 || b_ == -1) ? "" : exact::to_string(abs(b_)) + "*";
  if (a_ == 0) return (b_ < 0 ? "-" : "") + coeff + "sqrt2";
  return exact::to_string(a_) + (b_ < 0 ? " - " : " + ") + coeff + "sqrt2";
}

std::string QSqrt2::to_decimal_upper(int digits) const {
  if (b_ == 0) return exact::to_decimal_upper(a_, digits);
  // Tighten the enclosure until it is far narrower than the last printed digit;
  // the upper end is always a valid round-up source.
  const BigRational scale = pow(BigRational(10), static_cast<unsigned long>(digits + 6));
  unsigned bits = 128;
  for (;;) {
    const BigRational lo = lower(bits);
    const BigRational hi = upper(bits);
    const BigRational mag = abs(lo) < abs(hi) ? BigRational(abs(lo)) : BigRational(abs(hi));
    if ((sgn(lo) == sgn(hi) && (hi - lo) * scale <= mag) || bits >= (1U << 20)) {
      return exact::to_decimal_upper(hi, digits);
    }
    bits *= 2;
  }
}

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c != ' ' && c != '\t') out.push_back(c);
  }
  return out;
}

}  // namespace

QSqrt2 QSqrt2::parse(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw std::invalid_argument("empty Q(sqrt2) literal");
  if (s == "s0") return s0();

  // Split into signed terms at '+'/'-' that do not start the string or follow '/'.
  std::vector<std::string> terms;
  std::string current;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if ((c == '+' || c == '-') && i > 0 && s[i - 1] != '/' && s[i - 1] != '*') {
      terms.push_back(current);
      current.clear();
    }
    current.push_back(c);
  }
  terms.push_back(current);

  QSqrt2 value;
  bool seen_rational = false;
  bool seen_irrational = false;
  constexpr std::string_view kRoot = "sqrt2";
  for (std::string term : terms) {
    bool negative = false;
    if (!term.empty() && (term[0] == '+' || term[0] == '-')) {
      negative = term[0] == '-';
      term.erase(0, 1);
    }
    if (term.empty()) throw std::invalid_argument("malformed Q(sqrt2) literal: '" + s + "'");
    BigRational coeff;
    bool irrational = false;
    if (term.size() >= kRoot.size() && term.compare(term.size() - kRoot.size(), kRoot.size(), kRoot) == 0) {
      irrational = true;
      std::string prefix = term.substr(0, term.size() - kRoot.size());
      if (prefix.empty()) {
        coeff = 1;
      } else {
        if (prefix.back() != '*') throw std::invalid_argument("malformed Q(sqrt2) literal: '" + s + "'");
        prefix.pop_back();
        coeff = parse_rational(prefix);
      }
    } else {
      coeff = parse_rational(term);
    }
    if (negative) coeff = -coeff;
    if (irrational) {
      if (seen_irrational) throw std::invalid_argument("repeated sqrt2 term in '" + s + "'");
      seen_irrational = true;
      value.b_ = coeff;
    } else {
      if (seen_rational) throw std::invalid_argument("repeated rational term in '" + s + "'");
      seen_rational = true;
      value.a_ = coeff;
    }
  }
  return value;
}

}  // namespace rankbound::exact
