#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gurland/expansion.hpp"
#include "gurland/mean_value.hpp"

namespace gurland::explorer {

/// Upper limit on the number of grid points of one sweep.
inline constexpr std::size_t kMaxGridPoints = 10'000'000;

enum class Scale { linear, log };

/// Parses "linear" or "log". Throws DomainError otherwise.
Scale parse_scale(std::string_view text);
std::string_view to_string(Scale scale);

/// One axis of a sweep: steps points from start to stop inclusive. A single
/// step pins the axis to start (stop must then equal start or be omitted).
struct AxisRange {
  double start = 0.0;
  double stop = 0.0;
  int steps = 0;

  /// Parses "A:B:N". Throws DomainError on malformed or invalid text.
  static AxisRange parse(std::string_view text);

  /// Throws DomainError unless 0 < start, stop > start (start == stop for a
  /// single step), steps >= 1, everything finite.
  void validate(std::string_view name) const;

  /// Grid values; the endpoints are exact.
  [[nodiscard]] std::vector<double> values(Scale scale) const;
};

/// Per-point evaluation settings.
struct EvaluationSettings {
  std::vector<TruncationOrder> m_orders{TruncationOrder{2}, TruncationOrder{3},
                                        TruncationOrder{5}, TruncationOrder{10}};
  double t_tolerance = kDefaultSolverTolerance;
  double s_inf_tolerance = 1e-13;
  int product_terms = kDefaultProductTerms;
};

/// A full grid description.
struct SweepSpec {
  AxisRange x_range;
  AxisRange y_range;
  Scale scale = Scale::linear;
  EvaluationSettings settings;
  /// Columns to write, empty for all. Output keeps canonical column order.
  std::vector<std::string> outputs;
  /// Worker threads, 0 for the hardware concurrency.
  unsigned threads = 0;

  /// Throws DomainError on any invalid field, including unknown column names
  /// and grids above kMaxGridPoints.
  void validate() const;
  [[nodiscard]] std::size_t point_count() const;
};

/// Everything computed at one grid point. Optional fields are left empty
/// where the quantity is undefined (t on the diagonal) or not representable.
struct SweepRecord {
  struct Order {
    int m = 0;
    std::optional<double> s_m;
    std::optional<double> epsilon_m;
    std::optional<double> v_m;
  };

  double x = 0.0;
  double y = 0.0;
  double q = 0.0;
  double ln_ratio_direct = 0.0;
  std::vector<Order> orders;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  std::optional<double> t;
  std::optional<double> lambda;
  std::optional<double> s_infinity;
  std::optional<int> s_inf_terms;
  double product_enclosure_width = 0.0;
  bool violation = false;
};

/// Absolute slack for the containment checks that set the violation flag.
double containment_slack(double reference);

/// Evaluates one point. Never throws for positive finite inputs: failures of
/// individual quantities leave their fields empty, and a failed invariant
/// sets the violation flag.
SweepRecord evaluate_point(double x, double y, const EvaluationSettings& settings);

/// Evaluates the grid in x-major order. Points may be computed concurrently;
/// the returned rows are always in grid order.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec);

struct SweepSummary {
  std::size_t rows = 0;
  std::size_t violations = 0;
  std::size_t q_at_least_one = 0;
  std::size_t lambda_count = 0;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  double lambda_mean = 0.0;
  std::size_t s_inf_count = 0;
  double max_s_inf_deviation = 0.0;
};

SweepSummary summarize(const std::vector<SweepRecord>& records);

}  // namespace gurland::explorer
