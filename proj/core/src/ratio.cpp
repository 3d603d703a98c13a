#include "gurland/ratio.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gurland/errors.hpp"

namespace gurland {
namespace {

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;

PositiveReal checked(double v, const char* name) {
  if (!std::isfinite(v) || !(v > 0.0)) {
    throw DomainError(std::string(name) + " must be > 0");
  }
  return PositiveReal(v);
}

// ln G⋆ = ln Γ(1+A+h) + ln Γ(1+A-h) - 2 ln Γ(1+A) in extended precision.
long double log_modified_ext(const QueryPoint& p) {
  const long double x = p.smaller();
  const long double y = p.larger();
  const long double value =
      detail::log_gamma_second_difference(1.0L + (x + y) / 2.0L, (y - x) / 2.0L);
  return std::max(value, 0.0L);
}

}  // namespace

QueryPoint::QueryPoint(PositiveReal x, PositiveReal y) : x_(x.value()), y_(y.value()) {}

QueryPoint::QueryPoint(double x, double y) : QueryPoint(checked(x, "x"), checked(y, "y")) {}

double QueryPoint::arithmetic_mean() const noexcept {
  const double lo = smaller();
  const double hi = larger();
  return lo + (hi - lo) / 2.0;
}

double QueryPoint::geometric_mean() const noexcept {
  const double lo = smaller();
  const double hi = larger();
  double g = std::sqrt(lo * hi);
  if (!std::isfinite(g) || g == 0.0) {
    g = std::sqrt(lo) * std::sqrt(hi);
  }
  return std::min(g, arithmetic_mean());
}

double QueryPoint::half_gap() const noexcept { return (larger() - smaller()) / 2.0; }

double QueryPoint::mean_gap() const noexcept {
  const double d = std::sqrt(larger()) - std::sqrt(smaller());
  return d * d / 2.0;
}

bool QueryPoint::is_degenerate() const noexcept {
  return larger() - smaller() <= kDegeneracyThreshold * larger();
}

ProductTerm product_term(const QueryPoint& p, int n) {
  if (n < 1) {
    throw DomainError("product_term: index must be >= 1");
  }
  const double q = p.half_gap() / (static_cast<double>(n) + p.arithmetic_mean());
  const double c = q * q;
  return {n, c, 1.0 / (1.0 - c)};
}

double gurland_ratio(const QueryPoint& p) {
  if (p.is_diagonal()) {
    return 1.0;
  }
  const long double x = p.smaller();
  const long double y = p.larger();
  const long double mean = (x + y) / 2.0L;
  const long double log_ratio = detail::log_gamma_ext(x) + detail::log_gamma_ext(y) -
                                2.0L * detail::log_gamma_ext(mean);
  return static_cast<double>(std::exp(log_ratio));
}

double modified_ratio(const QueryPoint& p) {
  if (p.is_diagonal()) {
    return 1.0;
  }
  return static_cast<double>(std::exp(log_modified_ext(p)));
}

double log_modified_ratio_direct(const QueryPoint& p) {
  if (p.is_diagonal()) {
    return 0.0;
  }
  return static_cast<double>(log_modified_ext(p));
}

double check_relation(const QueryPoint& p) {
  if (p.is_diagonal()) {
    return 0.0;
  }
  const double mean = p.arithmetic_mean();
  const double factor = (p.smaller() / mean) * (p.larger() / mean);  // 4xy / (x+y)²
  const double star = modified_ratio(p);
  return std::abs(star - factor * gurland_ratio(p)) / star;
}

Enclosure log_modified_ratio_product(const QueryPoint& p, int n_terms) {
  if (n_terms < 1) {
    throw DomainError("log_modified_ratio_product: n_terms must be >= 1");
  }
  if (p.is_diagonal()) {
    return Enclosure::point(0.0);
  }
  const double h = p.half_gap();
  const double mean = p.arithmetic_mean();

  // Smallest factors first. Each -log1p(-c) carries the rounding of c (a few
  // ulps, amplified by c / (1 - c)) plus one ulp of its own.
  double sum = 0.0;
  double error = 0.0;
  for (int n = n_terms; n >= 1; --n) {
    const double q = h / (static_cast<double>(n) + mean);
    const double c = q * q;
    const double term = -std::log1p(-c);
    sum += term;
    error += kUnitRoundoff * (2.0 * term + 10.0 * c / (1.0 - c)) + kUnitRoundoff * sum;
  }

  const double next_shift = static_cast<double>(n_terms) + 1.0 + mean;
  const Enclosure zeta = hurwitz_zeta(EvenExponent(2), PositiveReal(next_shift));
  const double q_next = h / next_shift;
  const double c_next = q_next * q_next;
  const double h2 = h * h;
  const double tail_lo = h2 * zeta.lo() * (1.0 - 4.0 * kUnitRoundoff);
  const double tail_hi = h2 * zeta.hi() / (1.0 - c_next) * (1.0 + 8.0 * kUnitRoundoff);

  constexpr double inf = std::numeric_limits<double>::infinity();
  return {std::nextafter(sum - error + tail_lo, -inf), std::nextafter(sum + error + tail_hi, inf)};
}

}  // namespace gurland
