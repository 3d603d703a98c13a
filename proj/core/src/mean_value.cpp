#include "gurland/mean_value.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gurland/errors.hpp"

namespace gurland {
namespace {

constexpr double kSignTolerance = 1e-11;
constexpr int kMaxBisections = 60;

double zeta2(double shift) {
  return hurwitz_zeta(EvenExponent(2), PositiveReal(shift)).midpoint();
}

}  // namespace

double TLocation::distance_to_midpoint() const noexcept { return std::abs(lambda - 0.5); }

BilateralBounds bilateral_bounds(const QueryPoint& p) {
  if (p.is_diagonal()) {
    return {};
  }
  const double h = p.half_gap();
  const double h2 = h * h;
  return {h2 * zeta2(1.0 + p.arithmetic_mean()), h2 * zeta2(1.0 + p.geometric_mean()),
          log_modified_ratio_direct(p)};
}

TLocation solve_t(const QueryPoint& p, double abs_tol) {
  if (!(abs_tol > 0.0 && abs_tol <= 1e-6)) {
    throw DomainError("solve_t: abs_tol must lie in (0, 1e-6]");
  }
  if (p.is_degenerate()) {
    throw DegeneratePoint("degenerate: x = y");
  }
  const double h = p.half_gap();
  const double h2 = h * h;
  const double target = log_modified_ratio_direct(p);
  auto f = [&](double t) { return h2 * zeta2(1.0 + t) - target; };

  TLocation loc;
  loc.bracket_lo = p.geometric_mean();
  loc.bracket_hi = p.arithmetic_mean();

  const double f_lo = f(loc.bracket_lo);
  const double f_hi = f(loc.bracket_hi);
  if (f_lo < -kSignTolerance || f_hi > kSignTolerance) {
    throw BracketFailure("solve_t: no sign change on [sqrt(xy), (x+y)/2] (f(lo) = " +
                         std::to_string(f_lo) + ", f(hi) = " + std::to_string(f_hi) + ")");
  }

  double lo = loc.bracket_lo;
  double hi = loc.bracket_hi;
  for (int i = 0; i < kMaxBisections && hi - lo >= abs_tol; ++i) {
    const double mid = lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) {
      break;
    }
    if (f(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  loc.t = lo + (hi - lo) / 2.0;
  loc.lambda = (loc.t - loc.bracket_lo) / p.mean_gap();
  loc.residual = std::abs(f(loc.t));
  return loc;
}

LambdaSummary lambda_sweep_statistic(std::span<const QueryPoint> points, double abs_tol) {
  LambdaSummary summary;
  summary.min = std::numeric_limits<double>::infinity();
  summary.max = -std::numeric_limits<double>::infinity();
  double total = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].is_degenerate()) {
      summary.skipped.push_back(i);
      continue;
    }
    const TLocation loc = solve_t(points[i], abs_tol);
    summary.min = std::min(summary.min, loc.lambda);
    summary.max = std::max(summary.max, loc.lambda);
    total += loc.lambda;
    summary.samples.push_back({i, loc});
  }
  summary.count = summary.samples.size();
  if (summary.count == 0) {
    summary.min = summary.max = 0.0;
  } else {
    summary.mean = total / static_cast<double>(summary.count);
  }
  return summary;
}

}  // namespace gurland
