#include "gurland/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "gurland/errors.hpp"

namespace gurland {
namespace {

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;

// Lanczos coefficients for g = 7, n = 9 (Godfrey).
constexpr long double kLanczosG = 7.0L;
constexpr std::array<long double, 9> kLanczos = {
    0.99999999999980993227684700473478L,  676.520368121885098567009190444019L,
    -1259.13921672240287047156078755283L, 771.3234287776530788486528258894L,
    -176.61502916214059906584551354L,     12.507343278686904814458936853L,
    -0.13857109526572011689554707L,       9.984369578019570859563e-6L,
    1.50563273514931155834e-7L};

constexpr long double kEulerGamma = 0.57721566490153286060651209008240243L;
constexpr long double kHalfLogTwoPi = 0.91893853320467274178032973640561764L;

// ζ(k) - 1 for k = 2 .. 40.
constexpr std::array<long double, 39> kZetaMinusOne = {
    0.64493406684822643647L,      0.2020569031595942854L,       0.082323233711138191516L,
    0.036927755143369926331L,     0.017343061984449139715L,     0.0083492773819228268398L,
    0.0040773561979443393787L,    0.0020083928260822144179L,    0.00099457512781808533715L,
    0.0004941886041194645587L,    0.00024608655330804829864L,   0.00012271334757848914675L,
    6.1248135058704829259e-5L,    3.0588236307020493552e-5L,    1.5282259408651871733e-5L,
    7.6371976378997622736e-6L,    3.8172932649998398565e-6L,    1.9082127165539389257e-6L,
    9.5396203387279611315e-7L,    4.7693298678780646312e-7L,    2.3845050272773299e-7L,
    1.1921992596531107307e-7L,    5.9608189051259479612e-8L,    2.9803503514652280186e-8L,
    1.4901554828365041235e-8L,    7.450711789835429492e-9L,     3.7253340247884570548e-9L,
    1.8626597235130490064e-9L,    9.3132743241966818287e-10L,   4.656629065033784073e-10L,
    2.328311833676505492e-10L,    1.1641550172700519776e-10L,   5.8207720879027008892e-11L,
    2.9103850444970996869e-11L,   1.4551921891041984236e-11L,   7.2759598350574810145e-12L,
    3.6379795473786511902e-12L,   1.8189896503070659476e-12L,   9.0949478402638892825e-13L};

// ln Γ(2 + z) = (1 - γ) z + Σ_{k>=2} (ζ(k) - 1) (-z)^k / k, for |z| <= 1/2.
long double log_gamma_two_plus(long double z) {
  const long double w = -z;
  long double poly = 0.0L;
  for (std::size_t i = kZetaMinusOne.size(); i-- > 0;) {
    const long double k = static_cast<long double>(i + 2);
    poly = poly * w + kZetaMinusOne[i] / k;
  }
  return (1.0L - kEulerGamma) * z + poly * w * w;
}

long double log_gamma_lanczos(long double x) {
  const long double z = x - 1.0L;
  long double series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    series += kLanczos[i] / (z + static_cast<long double>(i));
  }
  const long double t = z + kLanczosG + 0.5L;
  return kHalfLogTwoPi + (z + 0.5L) * std::log(t) - t + std::log(series);
}

// Binet's function μ(z) = ln Γ(z) - (z - 1/2) ln z + z - ln √(2π) by its
// asymptotic series; below 1e-25 for z >= kBinetThreshold.
constexpr long double kBinetThreshold = 12.0L;

long double binet(long double z) {
  static const std::vector<double> b = bernoulli_numbers(15);
  const long double inv2 = 1.0L / (z * z);
  long double sum = 0.0L;
  for (std::size_t k = b.size(); k-- > 0;) {
    const long double n = static_cast<long double>(2 * k + 2);
    sum = sum * inv2 + static_cast<long double>(b[k]) / (n * (n - 1.0L));
  }
  return sum / z;
}

// B_{2j} / (2j)! for j = 1..9; the ninth entry only sizes the truncation bound.
const std::array<double, 9>& euler_maclaurin_coefficients() {
  static const std::array<double, 9> coeffs = [] {
    std::array<double, 9> out{};
    const auto b = bernoulli_numbers(9);
    double factorial = 1.0;
    for (int j = 1; j <= 9; ++j) {
      factorial *= static_cast<double>((2 * j - 1) * (2 * j));
      out[static_cast<std::size_t>(j - 1)] = b[static_cast<std::size_t>(j - 1)] / factorial;
    }
    return out;
  }();
  return coeffs;
}

// Running-error summation: every addition contributes u |partial|, every term
// its own evaluation allowance.
class CertifiedSum {
 public:
  void add(double term, double term_error) {
    sum_ += term;
    error_ += term_error + kUnitRoundoff * std::abs(sum_);
  }
  [[nodiscard]] double sum() const { return sum_; }
  [[nodiscard]] double error() const { return error_; }

 private:
  double sum_ = 0.0;
  double error_ = 0.0;
};

// Relative rounding error committed when forming n + a.
double shift_rounding(double n, double a) {
  const double w = n + a;
  const double bb = w - n;
  const double err = (n - (w - bb)) + (a - bb);  // TwoSum
  return std::abs(err) / w;
}

struct ZetaSum {
  double value;
  double radius;
};

// Σ_{n>=0} f(n) with f(n) = (n + a)^{-s}, or f(n) = (a / (n + a))^{s} when scaled.
// Direct block n < N, then the Euler-Maclaurin tail with eight Bernoulli
// corrections; the remainder is bounded by the first omitted correction since
// every even derivative of f is positive.
ZetaSum euler_maclaurin_zeta(int s, double a, bool scaled) {
  const auto& coeff = euler_maclaurin_coefficients();
  const double sd = static_cast<double>(s);
  constexpr double kTarget = 0x1p-60;
  constexpr double kMaxBlock = 0x1p24;

  auto term = [&](double n, double& rel_err) {
    const double w = n + a;
    if (scaled) {
      if (n == 0.0) {
        rel_err = 0.0;
        return 1.0;
      }
      rel_err = (2.0 * sd + 4.0) * kUnitRoundoff;
      return std::pow(a / w, sd);
    }
    rel_err = sd * shift_rounding(n, a) + 4.0 * kUnitRoundoff;
    return std::pow(w, -sd);
  };

  double block = std::max(10.0, std::ceil(15.0 - a));
  for (;;) {
    const double w = block + a;
    double base_err = 0.0;
    const double base = term(block, base_err);
    const double correction_err = base_err + 64.0 * kUnitRoundoff;

    std::array<double, 8> corrections{};
    double rising = sd / w;  // s (s+1) ... (s+2j-2) / w^{2j-1}
    for (std::size_t j = 0; j < corrections.size(); ++j) {
      corrections[j] = coeff[j] * rising * base;
      const double k = static_cast<double>(2 * j + 1);
      rising *= (sd + k) * (sd + k + 1.0) / (w * w);
    }
    const double omitted = std::abs(coeff[8] * rising * base);

    CertifiedSum acc;
    for (std::size_t j = corrections.size(); j-- > 0;) {
      acc.add(corrections[j], correction_err * std::abs(corrections[j]));
    }
    const double half = 0.5 * base;
    acc.add(half, base_err * half);
    const double integral = base * w / (sd - 1.0);
    acc.add(integral, (base_err + 3.0 * kUnitRoundoff) * integral);
    for (double n = block - 1.0; n >= 0.0; n -= 1.0) {
      double rel = 0.0;
      const double f = term(n, rel);
      acc.add(f, rel * f);
    }

    if (omitted <= kTarget * acc.sum() || block >= kMaxBlock) {
      return {acc.sum(), omitted + acc.error()};
    }
    block *= 2.0;
  }
}

}  // namespace

PositiveReal::PositiveReal(double value) : value_(value) {
  if (!std::isfinite(value) || !(value > 0.0)) {
    throw DomainError("expected a positive finite real, got " + std::to_string(value));
  }
}

EvenExponent::EvenExponent(int s) : s_(s) {
  if (s < 2 || s % 2 != 0) {
    throw DomainError("exponent must be an even integer >= 2, got " + std::to_string(s));
  }
}

namespace detail {

long double log_gamma_ext(long double x) {
  if (!std::isfinite(x) || !(x > 0.0L)) {
    throw DomainError("log_gamma: argument must be positive and finite");
  }
  if (x < 0.5L) {
    return log_gamma_two_plus(x) - std::log1p(x) - std::log(x);
  }
  if (x < 1.5L) {
    const long double z = x - 1.0L;
    return log_gamma_two_plus(z) - std::log1p(z);
  }
  if (x <= 2.5L) {
    return log_gamma_two_plus(x - 2.0L);
  }
  return log_gamma_lanczos(x);
}

long double log_gamma_second_difference(long double center, long double offset) {
  if (!std::isfinite(center) || !std::isfinite(offset) || !(offset >= 0.0L) ||
      !(center - offset > 0.0L)) {
    throw DomainError("log_gamma_second_difference: need 0 <= offset < center");
  }
  if (offset == 0.0L) {
    return 0.0L;
  }
  // Γ(z) = Γ(z + K) / (z (z+1) ... (z+K-1)): each shift contributes
  // ln(c+h) + ln(c-h) - 2 ln c = log1p(-(h/c)²).
  long double value = 0.0L;
  long double c = center;
  while (c - offset < kBinetThreshold) {
    const long double r = offset / c;
    value -= std::log1p(-r * r);
    c += 1.0L;
  }
  // Stirling part: the linear term cancels, the rest is
  // (c - 1/2) ln(1 - r²) + h ln((1+r)/(1-r)).
  const long double r = offset / c;
  value += (c - 0.5L) * std::log1p(-r * r) + 2.0L * offset * std::atanh(r);
  value += binet(c + offset) + binet(c - offset) - 2.0L * binet(c);
  return value;
}

Enclosure hurwitz_zeta_scaled(int s, double a) {
  if (s < 2) {
    throw DomainError("hurwitz_zeta_scaled: exponent must be >= 2");
  }
  if (!std::isfinite(a) || !(a > 0.0)) {
    throw DomainError("hurwitz_zeta_scaled: shift must be positive and finite");
  }
  const ZetaSum z = euler_maclaurin_zeta(s, a, true);
  return Enclosure::around(z.value, z.radius);
}

}  // namespace detail

double log_gamma(PositiveReal x) {
  return static_cast<double>(detail::log_gamma_ext(x.value()));
}

Enclosure hurwitz_zeta(EvenExponent s, PositiveReal a) {
  const ZetaSum z = euler_maclaurin_zeta(s.value(), a.value(), false);
  if (!std::isfinite(z.value) || !std::isfinite(z.radius)) {
    throw RangeError("hurwitz_zeta overflows binary64");
  }
  if (!(z.value >= std::numeric_limits<double>::min())) {
    throw RangeError("hurwitz_zeta underflows binary64");
  }
  return Enclosure::around(z.value, z.radius);
}

}  // namespace gurland
