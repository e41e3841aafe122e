#include "rankbound/codes/bounds.hpp"

#include <stdexcept>
#include <string>

namespace rankbound::codes {

using exact::BigInt;
using exact::BigRational;
using exact::make_rational;

std::string_view to_string(Method m) {
  switch (m) {
    case Method::rankin_half_pi: return "rankin_half_pi";
    case Method::rankin_obtuse: return "rankin_obtuse";
    case Method::rankin_integral: return "rankin_integral";
    case Method::closed_form: return "closed_form";
    case Method::levenshtein: return "levenshtein";
  }
  return "unknown";
}

namespace {

constexpr unsigned kEnclosureBits = 256;

void check_dimension(int n, const AngleParams& params) {
  if (params.n != n) throw std::invalid_argument("angle parameters were built for a different dimension");
}

QSqrt2 integer(long v) { return QSqrt2(v); }

void set_threshold(BoundReport& r, std::optional<QSqrt2> threshold) {
  if (!threshold) return;
  r.threshold = std::move(threshold);
  r.holds = r.value < *r.threshold;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace

BigRational IntegralBracket::lo_lower() const { return exact::sqrt_lower(lo_squared().lower(kEnclosureBits)); }

BigRational IntegralBracket::hi_upper() const { return exact::sqrt_upper(hi_squared.upper(kEnclosureBits)); }

IntegralBracket integral_bracket(int n, const AngleParams& params) {
  check_dimension(n, params);
  if (n < 6) throw std::invalid_argument("integral bracket needs n >= 6");
  if (integer(n) <= QSqrt2(6) * params.tan_sq_alpha - QSqrt2(3)) {
    throw std::invalid_argument("integral bracket needs n > 6 tan^2(alpha) - 3");
  }
  IntegralBracket b;
  b.n = n;
  const QSqrt2 cos_sq = params.cos_sq_alpha();
  const long n2m1 = static_cast<long>(n) * n - 1;
  b.hi_squared = exact::pow(params.sin_sq_alpha, static_cast<unsigned long>(n + 1)) /
                 (integer(n2m1) * integer(n2m1) * cos_sq * cos_sq);
  b.lo_factor = QSqrt2(1) - QSqrt2(3) * params.tan_sq_alpha / integer(n + 3);
  return b;
}

BoundReport rankin_bound(int n, const AngleCase& angle, std::optional<QSqrt2> threshold) {
  if (n < 2) throw std::invalid_argument("Rankin's bound needs n >= 2");
  BoundReport r;
  r.n = n;
  if (std::holds_alternative<HalfPi>(angle)) {
    r.method = Method::rankin_half_pi;
    r.value = integer(2L * n);
  } else if (std::holds_alternative<Obtuse>(angle)) {
    r.method = Method::rankin_obtuse;
    r.value = integer(n + 1L);
  } else {
    const AngleParams& p = std::get<Acute>(angle).params;
    check_dimension(n, p);
    if (p.sin_sq_alpha <= QSqrt2(0) || p.sin_sq_alpha >= QSqrt2(1)) {
      throw std::invalid_argument("Rankin's acute case needs 0 < sin^2(alpha) < 1");
    }
    const QSqrt2 f = QSqrt2(1) - QSqrt2(3) * p.tan_sq_alpha / integer(n + 3);
    if (f.sign() <= 0) throw std::invalid_argument("integral lower bound is not positive for this (n, alpha)");
    // value = G sin(a) tan(a) / I <= G (n^2-1) cos(a) / (sin^(n-1)(a) f), with G = gamma_half_ratio(n).
    const long n2m1 = static_cast<long>(n) * n - 1;
    const QSqrt2 rest_sq = integer(n2m1) * integer(n2m1) * p.cos_sq_alpha() /
                           (exact::pow(p.sin_sq_alpha, static_cast<unsigned long>(n - 1)) * f * f);
    const BigRational value_sq_upper = exact::gamma_half_ratio(n).square_upper() * rest_sq.upper(kEnclosureBits);
    r.method = Method::rankin_integral;
    r.value = QSqrt2(exact::sqrt_upper(value_sq_upper));
    r.value_exact = false;
  }
  set_threshold(r, std::move(threshold));
  return r;
}

BoundReport closed_form_bound(int n, const AngleParams& params, std::optional<QSqrt2> threshold) {
  check_dimension(n, params);
  if (n <= 5 || integer(n) <= QSqrt2(6) * params.tan_sq_alpha - QSqrt2(3)) {
    throw std::invalid_argument("closed-form bound needs n > max{6 tan^2(alpha) - 3, 5}");
  }
  if (params.s == QSqrt2::s0() && n <= 25) {
    throw std::invalid_argument("closed-form bound at s = sqrt2 - 1 is stated for n > 25");
  }
  const long n2m1 = static_cast<long>(n) * n - 1;
  const QSqrt2 inv_sin_sq = QSqrt2(1) / params.sin_sq_alpha;
  BoundReport r;
  r.n = n;
  r.method = Method::closed_form;
  const QSqrt2 value_sq = integer(n2m1) * integer(n2m1) * exact::pow(inv_sin_sq, static_cast<unsigned long>(n));
  if (n % 2 == 0) {
    r.value = integer(n2m1) * exact::pow(inv_sin_sq, static_cast<unsigned long>(n / 2));
    r.value_exact = true;
  } else {
    r.value = QSqrt2(exact::sqrt_upper(value_sq.upper(kEnclosureBits)));
    r.value_exact = false;
  }
  if (threshold) {
    // value > 0, so value < T  <=>  T > 0 and value^2 < T^2.
    r.holds = threshold->sign() > 0 && value_sq < *threshold * *threshold;
    r.threshold = std::move(threshold);
  }
  return r;
}

BoundReport levenshtein_bound(exact::GegenbauerFamily& family, const QSqrt2& s, std::optional<QSqrt2> threshold) {
  const int n = family.dimension();
  const exact::IntervalLocation loc = exact::locate_interval(family, s);
  const int k = loc.k;
  const QSqrt2 one(1);
  const QSqrt2 qk = family.q(k).evaluate(s);
  BoundReport r;
  r.n = n;
  r.method = Method::levenshtein;
  r.k = k;
  r.branch = loc.branch;
  if (loc.branch == exact::Branch::A) {
    if (qk.is_zero()) throw std::domain_error("Levenshtein bound: Q_k(s) = 0 at s = " + s.to_string());
    const QSqrt2 qkm1 = family.q(k - 1).evaluate(s);
    const QSqrt2 lead(make_rational(2 * k + n - 3, n - 1));
    const QSqrt2 coeff(BigRational(binomial(static_cast<unsigned long>(k + n - 3), static_cast<unsigned long>(k - 1))));
    r.value = coeff * (lead - (qkm1 - qk) / ((one - s) * qk));
  } else {
    const QSqrt2 qk1 = family.q(k + 1).evaluate(s);
    const QSqrt2 sum = qk + qk1;
    if (sum.is_zero()) throw std::domain_error("Levenshtein bound: Q_k(s) + Q_{k+1}(s) = 0 at s = " + s.to_string());
    const QSqrt2 lead(make_rational(2 * k + n - 1, n - 1));
    const QSqrt2 coeff(BigRational(binomial(static_cast<unsigned long>(k + n - 2), static_cast<unsigned long>(k))));
    r.value = coeff * (lead - (one + s) * (qk - qk1) / ((one - s) * sum));
  }
  set_threshold(r, std::move(threshold));
  return r;
}

BoundReport levenshtein_bound(int n, const QSqrt2& s, std::optional<QSqrt2> threshold) {
  if (n < 3) throw std::invalid_argument("Levenshtein's bound needs n >= 3");
  exact::GegenbauerFamily family(n);
  return levenshtein_bound(family, s, std::move(threshold));
}

}  // namespace rankbound::codes
