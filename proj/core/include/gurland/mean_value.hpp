#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gurland/ratio.hpp"

namespace gurland {

inline constexpr double kDefaultSolverTolerance = 1e-12;

/// lower = h² ζ(2, 1+A)  <=  target = ln G⋆  <=  upper = h² ζ(2, 1+√(xy)).
struct BilateralBounds {
  double lower = 0.0;
  double upper = 0.0;
  double target = 0.0;
};

/// The mean-value parameter t with ln G⋆ = h² ζ(2, 1+t), inside (√(xy), A).
struct TLocation {
  double t = 0.0;
  double bracket_lo = 0.0;  // √(xy)
  double bracket_hi = 0.0;  // A
  double lambda = 0.0;      // (t - bracket_lo) / (bracket_hi - bracket_lo)
  double residual = 0.0;    // |h² ζ(2, 1+t) - ln G⋆|

  [[nodiscard]] double distance_to_midpoint() const noexcept;
};

BilateralBounds bilateral_bounds(const QueryPoint& p);

/// Bisection on f(t) = h² ζ(2, 1+t) - ln G⋆ over [√(xy), A]. f is strictly
/// decreasing, so the bracket never needs repair; 60 halvings at most.
///
/// Throws DegeneratePoint when |x - y| <= 1e-9 max(x, y), DomainError unless
/// 0 < abs_tol <= 1e-6, and BracketFailure if the endpoint signs are wrong by
/// more than 1e-11.
TLocation solve_t(const QueryPoint& p, double abs_tol = kDefaultSolverTolerance);

struct LambdaSample {
  std::size_t index = 0;
  TLocation location;
};

struct LambdaSummary {
  std::size_t count = 0;
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  std::vector<LambdaSample> samples;
  std::vector<std::size_t> skipped;  // indices of degenerate points
};

/// solve_t over every point; degenerate points are skipped and listed.
LambdaSummary lambda_sweep_statistic(std::span<const QueryPoint> points,
                                     double abs_tol = kDefaultSolverTolerance);

}  // namespace gurland
