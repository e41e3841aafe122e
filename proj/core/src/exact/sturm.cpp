#include "rankbound/exact/sturm.hpp"

#include <stdexcept>

namespace rankbound::exact {

namespace {

// Positive rescaling keeps coefficient sizes in check without touching signs.
RationalPolynomial positive_normalize(const RationalPolynomial& p) {
  if (p.is_zero()) return p;
  const BigRational lc = abs(p.leading());
  return p * BigRational(1 / lc);
}

template <typename Signs>
std::size_t count_variations(const Signs& signs) {
  std::size_t v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int sign_of(const BigRational& q) { return q < 0 ? -1 : (q > 0 ? 1 : 0); }

}  // namespace

SturmChain::SturmChain(const RationalPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
  RationalPolynomial base = p;
  if (p.degree() >= 1) {
    const RationalPolynomial g = gcd(p, p.derivative());
    if (g.degree() > 0) base = p.divmod(g).first;
  }
  chain_.push_back(positive_normalize(base));
  if (base.degree() < 1) return;
  chain_.push_back(positive_normalize(base.derivative()));
  for (;;) {
    const auto& a = chain_[chain_.size() - 2];
    const auto& b = chain_.back();
    RationalPolynomial r = -a.divmod(b).second;
    if (r.is_zero()) break;
    chain_.push_back(positive_normalize(r));
  }
}

std::size_t SturmChain::variations(const BigRational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(q.sign_at(x));
  return count_variations(signs);
}

std::size_t SturmChain::variations(const QSqrt2& x) const {
  if (x.is_rational()) return variations(x.rational_part());
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(q.sign_at(x));
  return count_variations(signs);
}

std::size_t SturmChain::variations_at_pos_infinity() const {
  std::vector<int> signs;
  for (const auto& q : chain_) signs.push_back(sign_of(q.leading()));
  return count_variations(signs);
}

std::size_t SturmChain::variations_at_neg_infinity() const {
  std::vector<int> signs;
  for (const auto& q : chain_) {
    const int s = sign_of(q.leading());
    signs.push_back(q.degree() % 2 == 0 ? s : -s);
  }
  return count_variations(signs);
}

std::size_t SturmChain::count_roots(const BigRational& lo, const BigRational& hi) const {
  if (!(lo < hi)) return 0;
  return variations(lo) - variations(hi);
}

std::size_t SturmChain::count_roots_above(const BigRational& x) const {
  return variations(x) - variations_at_pos_infinity();
}

std::size_t SturmChain::count_roots_above(const QSqrt2& x) const {
  return variations(x) - variations_at_pos_infinity();
}

std::size_t SturmChain::count_real_roots() const {
  return variations_at_neg_infinity() - variations_at_pos_infinity();
}

IsolatedRoot::IsolatedRoot(SturmChain chain, BigRational lo, BigRational hi)
    : chain_(std::move(chain)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (chain_.count_roots(lo_, hi_) != 1) throw std::logic_error("interval does not isolate a single root");
  if (chain_.square_free().sign_at(hi_) == 0) exact_ = hi_;
}

void IsolatedRoot::refine_to(const BigRational& width) {
  while (hi_ - lo_ > width) {
    BigRational mid = (lo_ + hi_) / 2;
    if (chain_.count_roots(mid, hi_) == 1) {
      lo_ = std::move(mid);
    } else {
      // The root lies in (lo, mid]; mid itself may be the root.
      if (chain_.square_free().sign_at(mid) == 0) exact_ = mid;
      hi_ = std::move(mid);
    }
  }
}

int IsolatedRoot::compare(const QSqrt2& x) const {
  // x is below the root iff the root is in (x, hi] with x >= lo, or x < lo.
  if (x <= QSqrt2(lo_)) return -1;
  if (x > QSqrt2(hi_)) return 1;
  if (chain_.square_free().sign_at(x) == 0) return 0;
  // Exactly one root in (lo, hi]: it is above x iff variations drop after x.
  const std::size_t above = chain_.variations(x) - chain_.variations(hi_);
  return above == 1 ? -1 : 1;
}

BigRational cauchy_root_bound(const RationalPolynomial& p) {
  if (p.degree() < 1) return BigRational(1);
  BigRational m(0);
  const BigRational& lc = p.leading();
  for (int i = 0; i < p.degree(); ++i) {
    const BigRational r = abs(p.coefficients()[static_cast<std::size_t>(i)] / lc);
    if (r > m) m = r;
  }
  return m + 1;
}

IsolatedRoot largest_real_root(const RationalPolynomial& p) {
  if (p.degree() < 1) throw std::domain_error("constant polynomial has no real root");
  SturmChain chain(p);
  if (chain.count_real_roots() == 0) throw std::domain_error("polynomial has no real root");
  BigRational hi = cauchy_root_bound(p);
  BigRational lo = -hi;
  // Invariant: the largest root lies in (lo, hi].
  while (chain.count_roots(lo, hi) > 1) {
    BigRational mid = (lo + hi) / 2;
    if (chain.count_roots(mid, hi) >= 1) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  IsolatedRoot root(std::move(chain), std::move(lo), std::move(hi));
  root.refine_to(pow2(-64));
  return root;
}

IsolatedRoot largest_zero(const RationalPolynomial& p) {
  IsolatedRoot root = largest_real_root(p);
  // compare(x) is the sign of x - root.
  if (root.compare(BigRational(-1)) >= 0 || root.compare(BigRational(1)) < 0) {
    throw std::domain_error("largest real root lies outside (-1, 1]");
  }
  return root;
}

}  // namespace rankbound::exact
