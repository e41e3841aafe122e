#include "rankbound/exact/gegenbauer.hpp"

#include "rankbound/exact/sturm.hpp"

#include <stdexcept>
#include <string>

namespace rankbound::exact {

namespace {

constexpr int kMaxLocateDegree = 4096;

RationalPolynomial next_gegenbauer(int n, int k, const RationalPolynomial& qk, const RationalPolynomial& qkm1) {
  // Q_{k+1} = ((2k+n-2) t Q_k - k Q_{k-1}) / (k+n-2)
  RationalPolynomial next = RationalPolynomial::identity() * qk * BigRational(2 * k + n - 2);
  next -= qkm1 * BigRational(k);
  next *= make_rational(1, k + n - 2);
  return next;
}

RationalPolynomial exact_quotient(const RationalPolynomial& num, const RationalPolynomial& den) {
  auto [quot, rem] = num.divmod(den);
  if (!rem.is_zero()) throw std::logic_error("adjacent polynomial division left remainder " + rem.to_string());
  return quot;
}

RationalPolynomial adjacent_from(int n, int k, AdjacentKind kind, const RationalPolynomial& qk, const RationalPolynomial& qnext) {
  const RationalPolynomial diff = (qk - qnext) * BigRational(n - 1);
  if (kind == AdjacentKind::k10) {
    // (2k+n-1)(1-t)
    const RationalPolynomial den({BigRational(2 * k + n - 1), BigRational(-(2 * k + n - 1))});
    return exact_quotient(diff, den);
  }
  // (2k+n)(1-t^2)
  const RationalPolynomial den({BigRational(2 * k + n), BigRational(0), BigRational(-(2 * k + n))});
  return exact_quotient(diff, den);
}

void check_adjacent_args(int n, int k, AdjacentKind kind) {
  if (n < 3) throw std::invalid_argument("adjacent polynomials need n >= 3");
  if (kind == AdjacentKind::k10 && k < 1) throw std::invalid_argument("Q_k^{1,0} needs k >= 1");
  if (k < 0) throw std::invalid_argument("negative degree");
}

}  // namespace

RationalPolynomial gegenbauer(int n, int k) {
  if (n < 2) throw std::invalid_argument("Gegenbauer polynomials need n >= 2");
  if (k < 0) throw std::invalid_argument("negative degree");
  RationalPolynomial prev = RationalPolynomial::constant(BigRational(1));
  if (k == 0) return prev;
  RationalPolynomial cur = RationalPolynomial::identity();
  for (int j = 1; j < k; ++j) {
    RationalPolynomial next = next_gegenbauer(n, j, cur, prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RationalPolynomial adjacent_poly(int n, int k, AdjacentKind kind) {
  check_adjacent_args(n, k, kind);
  const int step = kind == AdjacentKind::k10 ? 1 : 2;
  return adjacent_from(n, k, kind, gegenbauer(n, k), gegenbauer(n, k + step));
}

GegenbauerFamily::GegenbauerFamily(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("Gegenbauer polynomials need n >= 2");
  q_.push_back(RationalPolynomial::constant(BigRational(1)));
  q_.push_back(RationalPolynomial::identity());
}

const RationalPolynomial& GegenbauerFamily::q(int k) {
  if (k < 0) throw std::invalid_argument("negative degree");
  while (static_cast<int>(q_.size()) <= k) {
    const int j = static_cast<int>(q_.size()) - 1;
    q_.push_back(next_gegenbauer(n_, j, q_[static_cast<std::size_t>(j)], q_[static_cast<std::size_t>(j - 1)]));
  }
  return q_[static_cast<std::size_t>(k)];
}

const RationalPolynomial& GegenbauerFamily::adjacent(int k, AdjacentKind kind) {
  check_adjacent_args(n_, k, kind);
  auto& cache = kind == AdjacentKind::k10 ? adj10_ : adj11_;
  const int step = kind == AdjacentKind::k10 ? 1 : 2;
  while (static_cast<int>(cache.size()) <= k) {
    const int j = static_cast<int>(cache.size());
    if (kind == AdjacentKind::k10 && j == 0) {
      cache.emplace_back();  // placeholder, Q_0^{1,0} is not used
      continue;
    }
    q(j + step);
    cache.push_back(adjacent_from(n_, j, kind, q_[static_cast<std::size_t>(j)], q_[static_cast<std::size_t>(j + step)]));
  }
  return cache[static_cast<std::size_t>(k)];
}

std::string_view to_string(Branch b) { return b == Branch::A ? "A" : "B"; }

namespace {

// s < largest real root of p, decided exactly.
bool below_largest_zero(const RationalPolynomial& p, const QSqrt2& s) {
  const SturmChain chain(p);
  return chain.count_roots_above(s) >= 1;
}

}  // namespace

IntervalLocation locate_interval(GegenbauerFamily& family, const QSqrt2& s) {
  if (family.dimension() < 3) throw std::invalid_argument("locate_interval needs n >= 3");
  if (s < QSqrt2(-1) || s >= QSqrt2(1)) throw std::invalid_argument("s must lie in [-1, 1)");
  // The intervals [t_{k-1}^{1,1}, t_k^{1,1}) partition [-1, 1) and t_k^{1,1}
  // increases with k, so the first k with s < t_k^{1,1} is the answer.
  for (int k = 1; k <= kMaxLocateDegree; ++k) {
    if (!below_largest_zero(family.adjacent(k, AdjacentKind::k11), s)) continue;
    const bool in_a = below_largest_zero(family.adjacent(k, AdjacentKind::k10), s);
    return {k, in_a ? Branch::A : Branch::B};
  }
  throw std::domain_error("s = " + s.to_string() + " is too close to 1 (k > " + std::to_string(kMaxLocateDegree) + ")");
}

IntervalLocation locate_interval(int n, const QSqrt2& s) {
  if (n < 3) throw std::invalid_argument("locate_interval needs n >= 3");
  GegenbauerFamily family(n);
  return locate_interval(family, s);
}

}  // namespace rankbound::exact
