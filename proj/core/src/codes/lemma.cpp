#include "rankbound/codes/lemma.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace rankbound::codes {

namespace {

BoundReport evaluate_at_s0(int n, int offset) {
  const QSqrt2 threshold = code_threshold(n, offset);
  if (n <= kClosedFormCrossover) return levenshtein_bound(n, QSqrt2::s0(), threshold);
  return closed_form_bound(n, make_angle_params(n, QSqrt2::s0()), threshold);
}

QSqrt2 ratio(long n) { return QSqrt2(exact::make_rational((n + 1) * (n + 1) - 1, n * n - 1)); }

}  // namespace

std::vector<BoundReport> verify_code_lemma(int n_lo, int n_hi, int exponent_offset, unsigned threads) {
  if (n_lo < 3) throw std::invalid_argument("verify_code_lemma needs n_lo >= 3");
  if (n_hi < n_lo) return {};
  const std::size_t count = static_cast<std::size_t>(n_hi - n_lo + 1);
  std::vector<BoundReport> out(count);
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(count));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = evaluate_at_s0(n_lo + static_cast<int>(i), exponent_offset);
    return out;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < count; i += threads) {
          out[i] = evaluate_at_s0(n_lo + static_cast<int>(i), exponent_offset);
        }
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

TailCertificate tail_certificate(int start, int window_end, int exponent_offset) {
  if (start <= 25) throw std::invalid_argument("tail certificate needs start > 25");
  if (window_end < start) throw std::invalid_argument("tail certificate window is empty");
  TailCertificate c;
  c.start = start;
  c.window_end = window_end;
  c.exponent_offset = exponent_offset;

  const QSqrt2 limit = QSqrt2(4) - QSqrt2(2) * QSqrt2::sqrt2();
  const QSqrt2 rho_start = ratio(start);
  c.ratio_bound_at_start = rho_start * rho_start < limit;

  // (1/sin^2 alpha)^n at s0 is (1 + 1/sqrt2)^n; advance it one factor per step.
  const QSqrt2 step = QSqrt2(1) / make_angle_params(start, QSqrt2::s0()).sin_sq_alpha;
  QSqrt2 power = exact::pow(step, static_cast<unsigned long>(start));
  QSqrt2 threshold = code_threshold(start, exponent_offset);
  QSqrt2 prev_rho = rho_start;
  c.ratio_decreasing = true;
  c.threshold_ratio_ok = true;
  for (long n = start; n <= window_end; ++n) {
    const QSqrt2 n2m1(n * n - 1);
    const QSqrt2 value_sq = n2m1 * n2m1 * power;
    const bool holds = threshold.sign() > 0 && value_sq < threshold * threshold;
    if (n == start) c.start_holds = holds;
    if (!holds && !c.first_window_failure) c.first_window_failure = static_cast<int>(n);
    ++c.window_checked;

    const QSqrt2 next_threshold = code_threshold(static_cast<int>(n + 1), exponent_offset);
    if (!(next_threshold > QSqrt2::sqrt2() * threshold)) c.threshold_ratio_ok = false;
    if (n > start) {
      const QSqrt2 rho = ratio(n);
      if (!(rho < prev_rho)) c.ratio_decreasing = false;
      prev_rho = rho;
    }
    threshold = next_threshold;
    power = power * step;
  }
  return c;
}

}  // namespace rankbound::codes
