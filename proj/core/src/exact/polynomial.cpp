#include "rankbound/exact/polynomial.hpp"

#include <stdexcept>

namespace rankbound::exact {

RationalPolynomial::RationalPolynomial(std::vector<BigRational> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<BigRational> coefficients) : coeffs_(coefficients) {
  normalize();
}

RationalPolynomial RationalPolynomial::constant(BigRational c) { return RationalPolynomial({std::move(c)}); }

RationalPolynomial RationalPolynomial::identity() { return RationalPolynomial({BigRational(0), BigRational(1)}); }

RationalPolynomial RationalPolynomial::linear_factor(const BigRational& root) {
  return RationalPolynomial({BigRational(-root), BigRational(1)});
}

void RationalPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational RationalPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigRational(0);
}

const BigRational& RationalPolynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

BigRational RationalPolynomial::evaluate(const BigRational& x) const {
  BigRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

QSqrt2 RationalPolynomial::evaluate(const QSqrt2& x) const {
  QSqrt2 acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += QSqrt2(*it);
  }
  return acc;
}

int RationalPolynomial::sign_at(const BigRational& x) const {
  const BigRational v = evaluate(x);
  return v < 0 ? -1 : (v > 0 ? 1 : 0);
}

int RationalPolynomial::sign_at(const QSqrt2& x) const { return evaluate(x).sign(); }

RationalPolynomial RationalPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigRational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::reflected() const {
  std::vector<BigRational> r = coeffs_;
  for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return RationalPolynomial(std::move(r));
}

RationalPolynomial RationalPolynomial::monic() const {
  if (coeffs_.empty()) return *this;
  RationalPolynomial m = *this;
  const BigRational lc = leading();
  for (auto& c : m.coeffs_) c /= lc;
  return m;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& o) {
  if (coeffs_.empty() || o.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigRational> out(coeffs_.size() + o.coeffs_.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const BigRational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::pair<RationalPolynomial, RationalPolynomial> RationalPolynomial::divmod(const RationalPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<BigRational> rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {RationalPolynomial{}, *this};
  std::vector<BigRational> quot(static_cast<std::size_t>(degree() - dd + 1), BigRational(0));
  const BigRational& lc = divisor.leading();
  for (int i = degree(); i >= dd; --i) {
    const auto ui = static_cast<std::size_t>(i);
    if (rem[ui] == 0) continue;
    const BigRational factor = rem[ui] / lc;
    quot[ui - static_cast<std::size_t>(dd)] = factor;
    for (int j = 0; j <= dd; ++j) {
      rem[ui - static_cast<std::size_t>(dd) + static_cast<std::size_t>(j)] -= factor * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

namespace {

template <typename Render>
std::string render(const std::vector<BigRational>& coeffs, char variable, Render&& coeff_text) {
  if (coeffs.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const BigRational& c = coeffs[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const BigRational mag = abs(c);
    if (k == 0) {
      out += coeff_text(mag);
      continue;
    }
    if (mag != 1) out += coeff_text(mag) + "*";
    out += variable;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace

std::string RationalPolynomial::to_string(char variable) const {
  return render(coeffs_, variable, [](const BigRational& c) { return exact::to_string(c); });
}

std::string RationalPolynomial::to_decimal_string(int digits, char variable) const {
  return render(coeffs_, variable, [digits](const BigRational& c) { return exact::to_decimal_upper(c, digits); });
}

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace rankbound::exact
