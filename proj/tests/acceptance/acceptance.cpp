// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "gurland/explorer/cli.hpp"
#include "gurland/gurland.hpp"

using namespace gurland;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

Outcome closed_forms() {
  const double g13 = rel_err(modified_ratio(QueryPoint(1.0, 3.0)), 1.5);
  const double g24 = rel_err(modified_ratio(QueryPoint(2.0, 4.0)), 4.0 / 3.0);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const double z2 =
      rel_err(hurwitz_zeta(EvenExponent(2), PositiveReal(1.0)).midpoint(), pi2 / 6.0);
  const double z4 =
      rel_err(hurwitz_zeta(EvenExponent(4), PositiveReal(1.0)).midpoint(), pi2 * pi2 / 90.0);
  Outcome o;
  o.pass = g13 <= 1e-12 && g24 <= 1e-12 && z2 <= 1e-13 && z4 <= 1e-13;
  o.detail = fmt("rel err G*(1,3) %.1e, G*(2,4) %.1e, zeta(2,1) %.1e, zeta(4,1) %.1e", g13, g24,
                 z2, z4);
  return o;
}

const std::vector<int> kOrders = {2, 3, 5, 10};

Outcome expansion_enclosure(const std::vector<QueryPoint>& pairs) {
  std::size_t checks = 0;
  std::size_t violations = 0;
  double worst = -INFINITY;
  for (const auto& p : pairs) {
    const double direct = log_modified_ratio_direct(p);
    for (const int m : kOrders) {
      const TruncationOrder order(m);
      const double s = series_sum(p, order);
      const double eps = epsilon_bound(p, order);
      const double excess = std::max(s - direct, direct - (s + eps));
      worst = std::max(worst, excess);
      ++checks;
      if (excess > 1e-11) ++violations;
    }
  }
  return {violations == 0, fmt("%zu checks, %zu violations, max excess %.2e (slack 1e-11)",
                               checks, violations, worst)};
}

Outcome bound_chain(const std::vector<QueryPoint>& pairs) {
  std::size_t chain_checks = 0;
  std::size_t chain_violations = 0;
  std::size_t small_q = 0;
  std::size_t small_q_failures = 0;
  double worst_v = 0.0;
  int max_m = 0;
  for (const auto& p : pairs) {
    for (const int m : kOrders) {
      const TruncationOrder order(m);
      const double eps = epsilon_bound(p, order);
      const double v = v_bound(p, order);
      ++chain_checks;
      if (!(eps <= v * (1.0 + 1e-13))) ++chain_violations;
    }
    const double q = q_ratio(p);
    if (q < 0.9) {
      ++small_q;
      const int m = q > 0.0 ? std::max(2, static_cast<int>(std::ceil(60.0 / (-2.0 * std::log10(q)))))
                            : 2;
      max_m = std::max(max_m, m);
      const double v = v_bound(p, TruncationOrder(m));
      worst_v = std::max(worst_v, v);
      if (!(v < 1e-10)) ++small_q_failures;
    }
  }
  return {chain_violations == 0 && small_q_failures == 0 && small_q > 0,
          fmt("eps_m <= V_m: %zu/%zu; Q < 0.9: %zu points, max V_m %.2e (m up to %d), %zu above "
              "1e-10",
              chain_checks - chain_violations, chain_checks, small_q, worst_v, max_m,
              small_q_failures)};
}

Outcome sandwich(const std::vector<QueryPoint>& pairs) {
  std::size_t checked = 0;
  std::size_t failures = 0;
  for (const auto& p : pairs) {
    if (!(std::abs(p.x() - p.y()) > 1e-6)) continue;
    const BilateralBounds b = bilateral_bounds(p);
    ++checked;
    if (!(b.lower < b.target && b.target < b.upper)) ++failures;
  }
  const BilateralBounds spot = bilateral_bounds(QueryPoint(1.0, 3.0));
  const double d_lo = std::abs(spot.lower - 0.39493);
  const double d_t = std::abs(spot.target - 0.40547);
  const double d_hi = std::abs(spot.upper - 0.44103);
  const bool spot_ok = d_lo <= 5e-5 && d_t <= 5e-5 && d_hi <= 5e-5;
  return {failures == 0 && spot_ok,
          fmt("strict on %zu/%zu points; (1,3): %.5f <= %.5f <= %.5f, offsets %.1e %.1e %.1e",
              checked - failures, checked, spot.lower, spot.target, spot.upper, d_lo, d_t, d_hi)};
}

Outcome solver(const std::vector<QueryPoint>& pairs) {
  std::size_t solved = 0;
  std::size_t outside = 0;
  std::size_t bad_residual = 0;
  std::size_t asymmetric = 0;
  double worst_residual = 0.0;
  for (const auto& p : pairs) {
    if (p.is_degenerate()) continue;
    const TLocation loc = solve_t(p);
    const TLocation swapped = solve_t(QueryPoint(p.y(), p.x()));
    ++solved;
    if (!(loc.bracket_lo < loc.t && loc.t < loc.bracket_hi)) ++outside;
    if (!(loc.residual <= 1e-10)) ++bad_residual;
    if (swapped.t != loc.t) ++asymmetric;
    worst_residual = std::max(worst_residual, loc.residual);
  }
  return {outside == 0 && bad_residual == 0 && asymmetric == 0 && solved > 0,
          fmt("%zu points: %zu outside the open bracket, max residual %.2e, %zu asymmetric",
              solved, outside, worst_residual, asymmetric)};
}

Outcome three_paths(const std::vector<QueryPoint>& pairs) {
  std::size_t wide = 0;
  std::size_t series_failures = 0;
  std::size_t product_failures = 0;
  double worst = 0.0;
  for (const auto& p : pairs) {
    const double direct = log_modified_ratio_direct(p);
    const SeriesLimit limit = s_infinity(p, 1e-13);
    const Enclosure product = log_modified_ratio_product(p, 10'000);
    const double dev = std::abs(direct - limit.value);
    worst = std::max(worst, dev);
    if (!(dev <= 1e-9)) ++series_failures;
    if (!product.contains(direct)) ++product_failures;
    if (q_ratio(p) >= 1.0) ++wide;
  }
  return {series_failures == 0 && product_failures == 0 && wide >= 100,
          fmt("%zu points (%zu with Q >= 1): max |direct - S_inf| %.2e, %zu outside the "
              "product enclosure",
              pairs.size(), wide, worst, product_failures)};
}

Outcome relation(const std::vector<QueryPoint>& pairs) {
  double worst = 0.0;
  for (const auto& p : pairs) worst = std::max(worst, check_relation(p));
  return {worst < 1e-12, fmt("max relative residual %.2e over %zu points", worst, pairs.size())};
}

Outcome classic_inequality(const std::vector<QueryPoint>& pairs) {
  std::size_t checked = 0;
  std::size_t failures = 0;
  double smallest = INFINITY;
  for (const auto& p : pairs) {
    if (p.is_diagonal()) continue;
    const double g = gurland_ratio(p);
    ++checked;
    smallest = std::min(smallest, g);
    if (!(g > 1.0)) ++failures;
  }
  return {failures == 0 && checked > 0,
          fmt("G > 1 on %zu/%zu points, smallest G - 1 = %.2e", checked - failures, checked,
              smallest - 1.0)};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome sweep_determinism() {
  std::random_device rd;
  const fs::path dir = fs::temp_directory_path() / ("gurland_acceptance_" + std::to_string(rd()));
  fs::create_directories(dir);
  const auto no_env = [](std::string_view) -> std::optional<std::string> { return std::nullopt; };
  int codes[2] = {-1, -1};
  std::string summaries[2];
  for (int i = 0; i < 2; ++i) {
    std::ostringstream out;
    std::ostringstream err;
    codes[i] = explorer::run_cli({"sweep", "--x-range", "0.01:100:50", "--y-range",
                                  "0.01:100:50", "--scale", "log", "--out",
                                  (dir / ("run" + std::to_string(i) + ".csv")).string()},
                                 out, err, no_env);
    summaries[i] = out.str();
  }
  const std::string a = slurp(dir / "run0.csv");
  const std::string b = slurp(dir / "run1.csv");
  std::error_code ec;
  fs::remove_all(dir, ec);

  const bool identical = !a.empty() && a == b;
  const bool clean = summaries[0].find("\nviolations              0\n") != std::string::npos;
  return {identical && clean && codes[0] == 0 && codes[1] == 0,
          fmt("exit codes %d/%d, %zu bytes, %s, zero violations reported: %s", codes[0], codes[1],
              a.size(), identical ? "byte-identical" : "DIFFERENT", clean ? "yes" : "no")};
}

}  // namespace

int main() {
  const auto corpus = testing::full_corpus();
  const std::vector<QueryPoint> random(corpus.begin(), corpus.begin() + 1000);

  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "closed-form reproduction", closed_forms},
      {2, "expansion enclosure S_m <= ln G* <= S_m + eps_m",
       [&] { return expansion_enclosure(random); }},
      {3, "bound chain eps_m <= V_m and V_m decay", [&] { return bound_chain(random); }},
      {4, "two-sided zeta sandwich", [&] { return sandwich(corpus); }},
      {5, "mean-value solver", [&] { return solver(corpus); }},
      {6, "direct / S_inf / product agreement", [&] { return three_paths(corpus); }},
      {7, "G* = 4xy/(x+y)^2 G identity", [&] { return relation(corpus); }},
      {8, "G(x, y) > 1 off the diagonal", [&] { return classic_inequality(corpus); }},
      {9, "sweep determinism on a 50x50 log grid", sweep_determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = c.run();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %d: %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), seconds);
    if (!o.pass) ++failed;
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
