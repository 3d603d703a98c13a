#include "gurland/explorer/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <system_error>
#include <thread>

#include "gurland/errors.hpp"
#include "gurland/explorer/format.hpp"
#include "gurland/mean_value.hpp"
#include "gurland/ratio.hpp"

namespace gurland::explorer {
namespace {

double parse_axis_real(std::string_view text, std::string_view what) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty()) {
    throw DomainError(std::string(what) + ": not a number: '" + std::string(text) + "'");
  }
  return value;
}

int parse_axis_steps(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), last, value);
  if (ec != std::errc{} || ptr != last || text.empty()) {
    throw DomainError(std::string(what) + ": steps must be an integer: '" + std::string(text) +
                      "'");
  }
  return value;
}

}  // namespace

Scale parse_scale(std::string_view text) {
  if (text == "linear") return Scale::linear;
  if (text == "log") return Scale::log;
  throw DomainError("scale must be 'linear' or 'log', got '" + std::string(text) + "'");
}

std::string_view to_string(Scale scale) { return scale == Scale::linear ? "linear" : "log"; }

AxisRange AxisRange::parse(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos) {
    throw DomainError("range must have the form START:STOP:STEPS, got '" + std::string(text) +
                      "'");
  }
  AxisRange range;
  range.start = parse_axis_real(text.substr(0, first), "range start");
  range.stop = parse_axis_real(text.substr(first + 1, second - first - 1), "range stop");
  range.steps = parse_axis_steps(text.substr(second + 1), "range");
  return range;
}

void AxisRange::validate(std::string_view name) const {
  const std::string prefix(name);
  if (!std::isfinite(start) || !std::isfinite(stop)) {
    throw DomainError(prefix + ": bounds must be finite");
  }
  if (!(start > 0.0)) throw DomainError(prefix + ": start must be > 0");
  if (steps < 1) throw DomainError(prefix + ": steps must be >= 1");
  if (steps == 1) {
    if (stop != start) throw DomainError(prefix + ": a single step needs stop == start");
  } else if (!(stop > start)) {
    throw DomainError(prefix + ": stop must be > start");
  }
}

std::vector<double> AxisRange::values(Scale scale) const {
  std::vector<double> out(static_cast<std::size_t>(steps));
  if (steps == 1) {
    out[0] = start;
    return out;
  }
  const double denom = static_cast<double>(steps - 1);
  const double log_start = std::log(start);
  const double log_span = std::log(stop) - log_start;
  for (int i = 0; i < steps; ++i) {
    const double f = static_cast<double>(i) / denom;
    out[static_cast<std::size_t>(i)] =
        scale == Scale::linear ? start + (stop - start) * f : std::exp(log_start + log_span * f);
  }
  out.front() = start;
  out.back() = stop;
  return out;
}

void SweepSpec::validate() const {
  x_range.validate("x-range");
  y_range.validate("y-range");
  if (settings.m_orders.empty()) throw DomainError("at least one truncation order is required");
  if (!(settings.t_tolerance > 0.0 && settings.t_tolerance <= 1e-6)) {
    throw DomainError("tol must lie in (0, 1e-6]");
  }
  if (!(settings.s_inf_tolerance > 0.0 && settings.s_inf_tolerance < 1.0)) {
    throw DomainError("series tolerance must lie in (0, 1)");
  }
  if (settings.product_terms < 1) throw DomainError("product terms must be >= 1");
  select_columns(settings.m_orders, outputs);
  if (point_count() > kMaxGridPoints) {
    throw DomainError("grid has " + std::to_string(point_count()) + " points, limit is " +
                      std::to_string(kMaxGridPoints));
  }
}

std::size_t SweepSpec::point_count() const {
  return static_cast<std::size_t>(std::max(x_range.steps, 0)) *
         static_cast<std::size_t>(std::max(y_range.steps, 0));
}

double containment_slack(double reference) { return 1e-11 + 1e-13 * std::fabs(reference); }

SweepRecord evaluate_point(double x, double y, const EvaluationSettings& settings) {
  const QueryPoint p(x, y);
  SweepRecord r;
  r.x = x;
  r.y = y;
  r.q = q_ratio(p);
  r.ln_ratio_direct = log_modified_ratio_direct(p);
  const double direct = r.ln_ratio_direct;
  const double slack = containment_slack(direct);

  for (const auto m : settings.m_orders) {
    SweepRecord::Order order;
    order.m = m.value();
    try {
      const ExpansionReport report = certified_log_ratio(p, m);
      order.s_m = report.s_m;
      order.epsilon_m = report.epsilon_m;
      order.v_m = report.v_m;
      if (!(report.s_m <= direct + slack && direct <= report.s_m + report.epsilon_m + slack)) {
        r.violation = true;
      }
    } catch (const RangeError&) {
    }
    r.orders.push_back(order);
  }

  const BilateralBounds bounds = bilateral_bounds(p);
  r.lower_bound = bounds.lower;
  r.upper_bound = bounds.upper;
  if (!(bounds.lower <= direct + slack && direct <= bounds.upper + slack)) r.violation = true;

  if (!p.is_degenerate()) {
    try {
      const TLocation loc = solve_t(p, settings.t_tolerance);
      r.t = loc.t;
      r.lambda = loc.lambda;
      if (!(loc.t >= loc.bracket_lo && loc.t <= loc.bracket_hi)) r.violation = true;
    } catch (const BracketFailure&) {
      r.violation = true;
    }
  }

  try {
    const SeriesLimit limit = s_infinity(p, settings.s_inf_tolerance);
    r.s_infinity = limit.value;
    r.s_inf_terms = limit.terms_used;
  } catch (const ConvergenceError&) {
  }

  const Enclosure product = log_modified_ratio_product(p, settings.product_terms);
  r.product_enclosure_width = product.width();
  if (!product.contains(direct, slack)) r.violation = true;
  return r;
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec) {
  spec.validate();
  const std::vector<double> xs = spec.x_range.values(spec.scale);
  const std::vector<double> ys = spec.y_range.values(spec.scale);
  const std::size_t total = xs.size() * ys.size();
  std::vector<SweepRecord> records(total);

  unsigned threads = spec.threads != 0 ? spec.threads : std::thread::hardware_concurrency();
  threads = static_cast<unsigned>(std::clamp<std::size_t>(threads, 1, total));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= total) return;
      try {
        records[i] = evaluate_point(xs[i / ys.size()], ys[i % ys.size()], spec.settings);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(total);
        return;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads - 1);
    for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

SweepSummary summarize(const std::vector<SweepRecord>& records) {
  SweepSummary s;
  s.rows = records.size();
  double lambda_sum = 0.0;
  for (const auto& r : records) {
    if (r.violation) ++s.violations;
    if (r.q >= 1.0) ++s.q_at_least_one;
    if (r.lambda) {
      if (s.lambda_count == 0) {
        s.lambda_min = s.lambda_max = *r.lambda;
      } else {
        s.lambda_min = std::min(s.lambda_min, *r.lambda);
        s.lambda_max = std::max(s.lambda_max, *r.lambda);
      }
      lambda_sum += *r.lambda;
      ++s.lambda_count;
    }
    if (r.s_infinity) {
      ++s.s_inf_count;
      s.max_s_inf_deviation =
          std::max(s.max_s_inf_deviation, std::fabs(*r.s_infinity - r.ln_ratio_direct));
    }
  }
  if (s.lambda_count != 0) s.lambda_mean = lambda_sum / static_cast<double>(s.lambda_count);
  return s;
}

}  // namespace gurland::explorer
