#include "gurland/explorer/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>

#include <CLI11.hpp>

#include "gurland/errors.hpp"
#include "gurland/explorer/config.hpp"
#include "gurland/explorer/format.hpp"
#include "gurland/explorer/sweep.hpp"
#include "gurland/gurland.hpp"

namespace gurland::explorer {
namespace {

constexpr int kDefaultExpandOrder = 5;

double parse_real(std::string_view text, std::string_view name) {
  double value = 0.0;
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw DomainError(std::string(name) + " must be a number, got '" + std::string(text) + "'");
  }
  return value;
}

long parse_integer(std::string_view text, std::string_view name) {
  long value = 0;
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw DomainError(std::string(name) + " must be an integer, got '" + std::string(text) + "'");
  }
  return value;
}

TruncationOrder parse_order(std::string_view text) {
  const long m = parse_integer(text, "m");
  if (m < 2 || m > 100'000) throw DomainError("m must be >= 2 (and at most 100000)");
  return TruncationOrder(static_cast<int>(m));
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> items;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const auto end = std::min(text.find(',', begin), text.size());
    std::string item(text.substr(begin, end - begin));
    std::erase_if(item, [](char c) { return c == ' ' || c == '\t'; });
    if (!item.empty()) items.push_back(std::move(item));
    begin = end + 1;
  }
  return items;
}

QueryPoint parse_point(const std::string& x, const std::string& y) {
  return QueryPoint(parse_real(x, "x"), parse_real(y, "y"));
}

void row(std::ostream& out, std::string_view label, std::string_view value) {
  out << std::left << std::setw(24) << label << value << '\n';
}

void row(std::ostream& out, std::string_view label, double value) {
  row(out, label, format_real(value));
}

std::string interval_text(const Enclosure& e) {
  return "[" + format_real(e.lo()) + ", " + format_real(e.hi()) + "]";
}

std::string point_text(double x, double y) {
  return "x = " + format_real(x) + ", y = " + format_real(y);
}

// Flag, then config file, then default.
class Resolver {
 public:
  explicit Resolver(const ConfigFile* config) : config_(config) {}

  std::optional<std::string> value(const CLI::Option* opt, const std::string& flag_value,
                                   std::string_view key) const {
    if (opt->count() > 0) return flag_value;
    if (config_ != nullptr) return config_->get(key);
    return std::nullopt;
  }

 private:
  const ConfigFile* config_;
};

int cmd_eval(const QueryPoint& p, std::ostream& out) {
  const Enclosure product = log_modified_ratio_product(p);
  row(out, "point", point_text(p.x(), p.y()));
  row(out, "G(x,y)", gurland_ratio(p));
  row(out, "G*(x,y)", modified_ratio(p));
  row(out, "ln G* direct", log_modified_ratio_direct(p));
  row(out, "ln G* product", interval_text(product));
  row(out, "product factors", std::to_string(kDefaultProductTerms));
  row(out, "product width", product.width());
  row(out, "relation residual", check_relation(p));
  return kExitSuccess;
}

int cmd_expand(const QueryPoint& p, TruncationOrder m, std::ostream& out, std::ostream& err) {
  const ExpansionReport report = certified_log_ratio(p, m);
  const double direct = log_modified_ratio_direct(p);
  const bool pass = report.enclosure.contains(direct, containment_slack(direct));
  const std::vector<double> terms = series_terms(p, m);

  row(out, "point", point_text(p.x(), p.y()));
  row(out, "m", std::to_string(m.value()));
  row(out, "Q", report.q);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    row(out, "term k=" + std::to_string(k + 1), terms[k]);
  }
  row(out, "S_m", report.s_m);
  row(out, "epsilon_m", report.epsilon_m);
  row(out, "V_m", report.v_m ? format_real(*report.v_m) : std::string("not representable"));
  row(out, "enclosure", interval_text(report.enclosure));
  row(out, "ln G* direct", direct);
  row(out, "verdict", pass ? "PASS" : "FAIL");
  if (report.q_exceeds_one()) {
    err << "warning: Q = " << format_real(report.q)
        << " >= 1; V_m does not shrink with m, the enclosure still holds\n";
  }
  return pass ? kExitSuccess : kExitViolation;
}

int cmd_bounds(const QueryPoint& p, std::ostream& out) {
  const BilateralBounds b = bilateral_bounds(p);
  const double slack = containment_slack(b.target);
  const bool pass = b.lower <= b.target + slack && b.target <= b.upper + slack;
  row(out, "point", point_text(p.x(), p.y()));
  row(out, "lower", b.lower);
  row(out, "target", b.target);
  row(out, "upper", b.upper);
  row(out, "target - lower", b.target - b.lower);
  row(out, "upper - target", b.upper - b.target);
  row(out, "verdict", pass ? "PASS" : "FAIL");
  return pass ? kExitSuccess : kExitViolation;
}

int cmd_tsolve(const QueryPoint& p, double tol, std::ostream& out) {
  const TLocation loc = solve_t(p, tol);
  row(out, "point", point_text(p.smaller(), p.larger()));
  row(out, "t", loc.t);
  row(out, "bracket", "[" + format_real(loc.bracket_lo) + ", " + format_real(loc.bracket_hi) + "]");
  row(out, "lambda", loc.lambda);
  row(out, "|lambda - 1/2|", loc.distance_to_midpoint());
  row(out, "residual", loc.residual);
  return kExitSuccess;
}

int cmd_sweep(const SweepSpec& spec, const std::string& out_path, OutputFormat format,
              std::ostream& out) {
  spec.validate();
  const std::vector<std::string> columns = select_columns(spec.settings.m_orders, spec.outputs);

  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + out_path + "' for writing");

  const std::vector<SweepRecord> records = run_sweep(spec);
  if (format == OutputFormat::csv) {
    write_csv(file, columns, records);
  } else {
    write_jsonl(file, columns, records);
  }
  file.flush();
  if (!file) throw IoError("write to '" + out_path + "' failed");

  const SweepSummary s = summarize(records);
  row(out, "rows", std::to_string(s.rows));
  row(out, "violations", std::to_string(s.violations));
  row(out, "q >= 1 points", std::to_string(s.q_at_least_one));
  row(out, "lambda count", std::to_string(s.lambda_count));
  if (s.lambda_count != 0) {
    row(out, "lambda min", s.lambda_min);
    row(out, "lambda max", s.lambda_max);
    row(out, "lambda mean", s.lambda_mean);
  }
  row(out, "max |S_inf - direct|", s.max_s_inf_deviation);
  if (s.s_inf_count != s.rows) {
    row(out, "S_inf not converged", std::to_string(s.rows - s.s_inf_count));
  }
  row(out, "output", out_path);
  return s.violations == 0 ? kExitSuccess : kExitViolation;
}

}  // namespace

std::optional<std::string> process_environment(std::string_view name) {
  const char* value = std::getenv(std::string(name).c_str());
  if (value == nullptr) return std::nullopt;
  return std::string(value);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const EnvLookup& env) {
  CLI::App app{"Certified evaluation of Gurland's gamma ratio and its zeta expansion",
               "gurland-kit"};
  app.require_subcommand(1, 1);
  app.footer("Settings resolve as flags, then the key = value file named by " +
             std::string(kConfigEnvVar) + ", then defaults.");

  std::string x_text;
  std::string y_text;
  auto add_point = [&](CLI::App* sub) {
    sub->add_option("x", x_text, "First argument, > 0")->required();
    sub->add_option("y", y_text, "Second argument, > 0")->required();
  };

  auto* eval = app.add_subcommand("eval", "G, G*, ln G* by the direct and product paths");
  add_point(eval);

  auto* expand = app.add_subcommand("expand", "Certified zeta expansion at order m");
  add_point(expand);
  std::string expand_m;
  auto* expand_m_opt =
      expand->add_option("--m", expand_m, "Truncation order, >= 2 (default 5)");

  auto* bounds = app.add_subcommand("bounds", "Two-sided zeta bounds on ln G*");
  add_point(bounds);

  auto* tsolve = app.add_subcommand("tsolve", "Mean-value parameter t(x, y)");
  add_point(tsolve);
  std::string tsolve_tol;
  auto* tsolve_tol_opt =
      tsolve->add_option("--tol", tsolve_tol, "Absolute tolerance on t, in (0, 1e-6]");

  auto* sweep = app.add_subcommand("sweep", "Evaluate a grid and write CSV or JSON lines");
  std::string x_range;
  std::string y_range;
  std::string scale = "linear";
  std::vector<std::string> sweep_m;
  std::string sweep_tol;
  std::string out_path;
  std::string format = "csv";
  std::vector<std::string> columns;
  std::string threads;
  auto* x_range_opt = sweep->add_option("--x-range", x_range, "START:STOP:STEPS");
  auto* y_range_opt = sweep->add_option("--y-range", y_range, "START:STOP:STEPS");
  auto* scale_opt = sweep->add_option("--scale", scale, "linear or log (default linear)");
  auto* sweep_m_opt = sweep->add_option("--m", sweep_m, "Truncation orders (default 2,3,5,10)")
                          ->delimiter(',');
  auto* sweep_tol_opt = sweep->add_option("--tol", sweep_tol, "Tolerance on t");
  auto* out_opt = sweep->add_option("--out", out_path, "Output file");
  auto* format_opt = sweep->add_option("--format", format, "csv or jsonl (default csv)");
  auto* columns_opt =
      sweep->add_option("--columns", columns, "Columns to write (default all)")->delimiter(',');
  auto* threads_opt = sweep->add_option("--threads", threads, "Worker threads (default: all cores)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    std::optional<ConfigFile> config;
    if (const auto path = env(kConfigEnvVar); path && !path->empty()) {
      config = ConfigFile::load(*path);
    }
    const Resolver resolve(config ? &*config : nullptr);

    if (eval->parsed()) return cmd_eval(parse_point(x_text, y_text), out);
    if (bounds->parsed()) return cmd_bounds(parse_point(x_text, y_text), out);
    if (expand->parsed()) {
      const QueryPoint p = parse_point(x_text, y_text);
      const auto m = resolve.value(expand_m_opt, expand_m, "m");
      return cmd_expand(p, m ? parse_order(*m) : TruncationOrder(kDefaultExpandOrder), out, err);
    }
    if (tsolve->parsed()) {
      const QueryPoint p = parse_point(x_text, y_text);
      const auto tol = resolve.value(tsolve_tol_opt, tsolve_tol, "tol");
      return cmd_tsolve(p, tol ? parse_real(*tol, "tol") : kDefaultSolverTolerance, out);
    }

    SweepSpec spec;
    const auto xr = resolve.value(x_range_opt, x_range, "x-range");
    const auto yr = resolve.value(y_range_opt, y_range, "y-range");
    const auto path = resolve.value(out_opt, out_path, "out");
    if (!xr) throw DomainError("sweep needs --x-range");
    if (!yr) throw DomainError("sweep needs --y-range");
    if (!path || path->empty()) throw DomainError("sweep needs --out");
    spec.x_range = AxisRange::parse(*xr);
    spec.y_range = AxisRange::parse(*yr);
    if (const auto s = resolve.value(scale_opt, scale, "scale")) spec.scale = parse_scale(*s);

    std::vector<std::string> m_items = sweep_m;
    if (sweep_m_opt->count() == 0 && config) {
      if (const auto m = config->get("m")) m_items = split_list(*m);
    }
    if (!m_items.empty()) {
      std::vector<int> orders;
      for (const auto& item : m_items) orders.push_back(parse_order(item).value());
      std::sort(orders.begin(), orders.end());
      orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
      spec.settings.m_orders.clear();
      for (const int m : orders) spec.settings.m_orders.emplace_back(m);
    }
    if (const auto tol = resolve.value(sweep_tol_opt, sweep_tol, "tol")) {
      spec.settings.t_tolerance = parse_real(*tol, "tol");
    }
    spec.outputs = columns;
    if (columns_opt->count() == 0 && config) {
      if (const auto c = config->get("columns")) spec.outputs = split_list(*c);
    }
    if (const auto t = resolve.value(threads_opt, threads, "threads")) {
      const long n = parse_integer(*t, "threads");
      if (n < 0 || n > 1024) throw DomainError("threads must lie in [0, 1024]");
      spec.threads = static_cast<unsigned>(n);
    }
    OutputFormat fmt = OutputFormat::csv;
    if (const auto f = resolve.value(format_opt, format, "format")) fmt = parse_format(*f);
    return cmd_sweep(spec, *path, fmt, out);
  } catch (const DegeneratePoint& e) {
    err << "error: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace gurland::explorer
