#include "gurland/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gurland/errors.hpp"

namespace gurland {
namespace {

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;
const double kLogMax = std::log(std::numeric_limits<double>::max());

// a_k = h^{2k} ζ(2k, b) / k with b = 1 + A, from (h/b)^{2k} and the scaled zeta.
class SeriesTerm {
 public:
  explicit SeriesTerm(const QueryPoint& p)
      : shift_(1.0 + p.arithmetic_mean()), log_ratio_(std::log(p.half_gap() / shift_)) {}

  double operator()(int k) const {
    const double scaled = detail::hurwitz_zeta_scaled(2 * k, shift_).midpoint();
    const double log_mag = 2.0 * k * log_ratio_ - std::log(static_cast<double>(k)) +
                           std::log(scaled);
    if (log_mag > kLogMax) {
      throw RangeError("series term k = " + std::to_string(k) + " overflows");
    }
    return std::exp(log_mag);
  }

  // Upper bound on a_{k+1} / a_k.
  [[nodiscard]] double dominating_ratio() const { return std::exp(2.0 * log_ratio_); }

 private:
  double shift_;
  double log_ratio_;
};

}  // namespace

TruncationOrder::TruncationOrder(int m) : m_(m) {
  if (m < 2) {
    throw DomainError("truncation order m must be >= 2, got " + std::to_string(m));
  }
}

double q_ratio(const QueryPoint& p) {
  return (p.larger() - p.smaller()) / (2.0 * (1.0 + p.geometric_mean()));
}

std::vector<double> series_terms(const QueryPoint& p, TruncationOrder m) {
  std::vector<double> terms(static_cast<std::size_t>(m.value() - 1), 0.0);
  if (p.is_diagonal()) {
    return terms;
  }
  const SeriesTerm term(p);
  for (int k = 1; k < m.value(); ++k) {
    terms[static_cast<std::size_t>(k - 1)] = term(k);
  }
  return terms;
}

double series_sum(const QueryPoint& p, TruncationOrder m) {
  const auto terms = series_terms(p, m);
  double sum = 0.0;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    sum += *it;
  }
  return sum;
}

double epsilon_bound(const QueryPoint& p, TruncationOrder m, int tail_terms) {
  if (tail_terms < 1) {
    throw DomainError("epsilon_bound: tail_terms must be >= 1");
  }
  if (p.is_diagonal()) {
    return 0.0;
  }
  const double x = p.smaller();
  const double y = p.larger();
  const double h = p.half_gap();
  const double md = static_cast<double>(m.value());
  const double log_m = std::log(md);

  // Zeta tail first (it is the smallest piece), then n = tail_terms .. 1.
  const double shift = static_cast<double>(tail_terms) + 1.0 + p.geometric_mean();
  const double tail_log = 2.0 * md * std::log(h / shift) - log_m;
  const double tail = std::exp(tail_log) * detail::hurwitz_zeta_scaled(2 * m.value(), shift).hi();

  double sum = tail;
  double error = (4.0 + 2.0 * md + std::abs(tail_log)) * kUnitRoundoff * tail;
  for (int n = tail_terms; n >= 1; --n) {
    const double nd = static_cast<double>(n);
    const double arg = md * (std::log(h / (nd + x)) + std::log(h / (nd + y))) - log_m;
    const double term = std::exp(arg);
    sum += term;
    error += (4.0 + 4.0 * md + std::abs(arg)) * kUnitRoundoff * term + kUnitRoundoff * sum;
  }
  return sum + 2.0 * error;
}

double v_bound(const QueryPoint& p, TruncationOrder m) {
  const double q = q_ratio(p);
  if (q == 0.0) {
    return 0.0;
  }
  const double md = static_cast<double>(m.value());
  const double g = p.geometric_mean();
  return std::exp(2.0 * md * std::log(q) - std::log(md)) * (1.0 + (1.0 + g) / (2.0 * md - 1.0));
}

ExpansionReport certified_log_ratio(const QueryPoint& p, TruncationOrder m) {
  ExpansionReport report;
  report.m = m;
  report.q = q_ratio(p);
  if (p.is_diagonal()) {
    report.v_m = 0.0;
    return report;
  }
  report.s_m = series_sum(p, m);
  report.epsilon_m = epsilon_bound(p, m);
  const double v = v_bound(p, m);
  if (std::isfinite(v)) {
    report.v_m = v;
  }
  const double width = report.v_m ? std::min(report.epsilon_m, *report.v_m) : report.epsilon_m;
  if (!std::isfinite(width)) {
    throw RangeError("remainder bound at m = " + std::to_string(m.value()) + " overflows");
  }
  report.enclosure = Enclosure(report.s_m, report.s_m + width);
  return report;
}

SeriesLimit s_infinity(const QueryPoint& p, double rel_tol, int max_terms) {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
    throw DomainError("s_infinity: rel_tol must lie in (0, 1)");
  }
  if (p.is_diagonal()) {
    return {0.0, 1};
  }
  const SeriesTerm term(p);
  const double tail_factor = 1.0 / (1.0 - term.dominating_ratio());

  double sum = 0.0;
  double current = term(1);
  for (int k = 1; k <= max_terms; ++k) {
    sum += current;
    const double next = term(k + 1);
    if (next * tail_factor < rel_tol * sum) {
      return {sum, k};
    }
    current = next;
  }
  throw ConvergenceError("s_infinity did not converge within " + std::to_string(max_terms) +
                         " terms");
}

}  // namespace gurland
