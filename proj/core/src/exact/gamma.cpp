#include "rankbound/exact/gamma.hpp"

#include <stdexcept>

namespace rankbound::exact {

namespace {

BigInt factorial(unsigned long k) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

// pi = 3.14159265358979323846264338327950288419716939937510...
const char* const kPiFloor38 = "314159265358979323846264338327950288419";
const char* const kPiCeil38 = "314159265358979323846264338327950288420";

BigRational decimal_bound(const char* digits) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, 38);
  return make_rational(BigInt(digits), scale);
}

BigRational pi_power(int e, bool upper) {
  // e is even here: pi^(e/2) with integer exponent
  const BigRational& pi = upper ? pi_upper() : pi_lower();
  const BigRational& pi_inv_src = upper ? pi_lower() : pi_upper();
  if (e >= 0) return pow(pi, static_cast<unsigned long>(e / 2));
  return 1 / pow(pi_inv_src, static_cast<unsigned long>(-e / 2));
}

}  // namespace

const BigRational& pi_lower() {
  static const BigRational value = decimal_bound(kPiFloor38);
  return value;
}

const BigRational& pi_upper() {
  static const BigRational value = decimal_bound(kPiCeil38);
  return value;
}

GammaRatio& GammaRatio::operator*=(const GammaRatio& o) {
  q *= o.q;
  pi_half_power += o.pi_half_power;
  return *this;
}

GammaRatio& GammaRatio::operator/=(const GammaRatio& o) {
  if (o.q == 0) throw std::domain_error("division by zero GammaRatio");
  q /= o.q;
  pi_half_power -= o.pi_half_power;
  return *this;
}

BigRational GammaRatio::square_upper() const {
  const BigRational q2 = q * q;
  return q2 * pi_power(2 * pi_half_power, true);
}

BigRational GammaRatio::square_lower() const {
  const BigRational q2 = q * q;
  return q2 * pi_power(2 * pi_half_power, false);
}

std::string GammaRatio::to_string() const {
  std::string s = exact::to_string(q);
  if (pi_half_power == 0) return s;
  return s + "*pi^(" + std::to_string(pi_half_power) + "/2)";
}

GammaRatio gamma_half_integer(int twice_argument) {
  if (twice_argument < 1) throw std::invalid_argument("Gamma needs a positive argument");
  if (twice_argument % 2 == 0) {
    return {BigRational(factorial(static_cast<unsigned long>(twice_argument / 2 - 1))), 0};
  }
  const auto k = static_cast<unsigned long>((twice_argument - 1) / 2);
  BigInt four_k;
  mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
  return {make_rational(factorial(2 * k), four_k * factorial(k)), 1};
}

GammaRatio gamma_half_ratio(int n) {
  if (n < 2) throw std::invalid_argument("gamma_half_ratio needs n >= 2");
  GammaRatio r{make_rational(1, 2), 1};
  r *= gamma_half_integer(n - 1);
  r /= gamma_half_integer(n);
  return r;
}

}  // namespace rankbound::exact
