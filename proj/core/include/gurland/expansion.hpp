#pragma once

#include <optional>
#include <vector>

#include "gurland/enclosure.hpp"
#include "gurland/ratio.hpp"

namespace gurland {

/// Truncation order m >= 2 of the zeta expansion.
class TruncationOrder {
 public:
  explicit TruncationOrder(int m);
  [[nodiscard]] constexpr int value() const noexcept { return m_; }

 private:
  int m_;
};

/// Number of directly summed terms in the remainder series before its zeta tail.
inline constexpr int kDefaultEpsilonTailTerms = 1000;
/// Term cap for the S_∞ summation.
inline constexpr int kDefaultSeriesTermCap = 10'000;

/// Everything known about ln G⋆ at truncation order m.
///
///   s_m        partial sum  Σ_{k<m} h^{2k} ζ(2k, 1+A) / k
///   epsilon_m  remainder bound (1/m) h^{2m} Σ_n ((n+x)(n+y))^{-m}, evaluated as an over-estimate
///   v_m        closed-form bound (1/m) Q^{2m} (1 + (1+√(xy))/(2m-1)); absent only if it overflows
///   enclosure  [s_m, s_m + min(epsilon_m, v_m)]
struct ExpansionReport {
  double s_m = 0.0;
  double epsilon_m = 0.0;
  std::optional<double> v_m;
  double q = 0.0;
  TruncationOrder m{2};
  Enclosure enclosure;

  /// Q >= 1: the enclosure is still valid but v_m does not shrink with m.
  [[nodiscard]] bool q_exceeds_one() const noexcept { return q >= 1.0; }
  [[nodiscard]] bool v_vanishes() const noexcept { return q < 1.0; }
};

struct SeriesLimit {
  double value = 0.0;
  int terms_used = 0;
};

/// Q(x, y) = |x - y| / (2 (1 + √(xy))).
double q_ratio(const QueryPoint& p);

/// The individual terms h^{2k} ζ(2k, 1+A) / k for k = 1 .. m-1.
std::vector<double> series_terms(const QueryPoint& p, TruncationOrder m);

/// S_m, the sum of series_terms. Throws RangeError if a term is not representable.
double series_sum(const QueryPoint& p, TruncationOrder m);

/// Upper estimate of the remainder bound ε_m: the first tail_terms summands
/// exactly, the rest over-bounded through (n+x)(n+y) >= (n+√(xy))².
double epsilon_bound(const QueryPoint& p, TruncationOrder m,
                     int tail_terms = kDefaultEpsilonTailTerms);

double v_bound(const QueryPoint& p, TruncationOrder m);

/// The full report. The enclosure holds for every x, y > 0; Q only governs
/// whether it shrinks as m grows.
ExpansionReport certified_log_ratio(const QueryPoint& p, TruncationOrder m);

/// Sums the series to its limit. Successive terms shrink at least by the ratio
/// r = (h / (1+A))² < 1, so summation stops once a_{k+1} / (1 - r) < rel_tol * S.
/// Throws ConvergenceError past max_terms.
SeriesLimit s_infinity(const QueryPoint& p, double rel_tol,
                       int max_terms = kDefaultSeriesTermCap);

}  // namespace gurland
