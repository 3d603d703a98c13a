#pragma once

#include <vector>

#include "gurland/enclosure.hpp"

namespace gurland {

/// A strictly positive, finite real. Construction rejects NaN, infinities,
/// zero and negatives with DomainError.
class PositiveReal {
 public:
  explicit PositiveReal(double value);
  [[nodiscard]] constexpr double value() const noexcept { return value_; }

 private:
  double value_;
};

/// An even integer exponent s >= 2.
class EvenExponent {
 public:
  explicit EvenExponent(int s);
  [[nodiscard]] constexpr int value() const noexcept { return s_; }

 private:
  int s_;
};

/// ln Γ(x) for x > 0, relative error <= 1e-14 on (0, 1e6].
///
/// Lanczos (g = 7, nine coefficients) away from the zeros of ln Γ; a Taylor
/// series in ζ(k) - 1 on [0.5, 2.5] so that the zeros at x = 1 and x = 2 are
/// resolved to full relative accuracy. Below 0.5 the recurrence is applied once.
double log_gamma(PositiveReal x);

/// Hurwitz zeta at an even exponent, enclosed:  Σ_{n>=0} (n + a)^{-s}.
///
/// The argument order (exponent, shift) follows the usual ζ(s, a) reading. The
/// enclosure width is at most 1e-14 of the value for moderate s and a. Throws
/// RangeError if the value over- or underflows binary64.
Enclosure hurwitz_zeta(EvenExponent s, PositiveReal a);

/// B_2, B_4, ..., B_{2 count} rounded from exact rationals. count in [1, 30].
std::vector<double> bernoulli_numbers(int count);

namespace detail {

/// ln Γ in extended precision. The ratio evaluators use this so the second
/// difference ln Γ(1+x) + ln Γ(1+y) - 2 ln Γ(1+A) keeps its leading digits.
long double log_gamma_ext(long double x);

/// ln Γ(c + h) + ln Γ(c - h) - 2 ln Γ(c) for 0 <= h < c, without the
/// cancellation of three separate log-gamma calls: the argument is shifted
/// past 12 by the recurrence (each shift is a log1p) and the Stirling part of
/// the difference has the closed form (c - 1/2) log1p(-r²) + 2h atanh(r),
/// r = h / c. Only Binet's remainder, of size 1/(12c), is differenced directly.
long double log_gamma_second_difference(long double center, long double offset);

/// Enclosure of a^s ζ(s, a) = Σ_{n>=0} (1 + n/a)^{-s}, which lies in
/// [1, 1 + a/(s-1)] and never under- or overflows. s >= 2 (any integer),
/// a > 0. Callers combine it with a log-space power.
Enclosure hurwitz_zeta_scaled(int s, double a);

}  // namespace detail

}  // namespace gurland
