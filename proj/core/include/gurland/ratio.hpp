#pragma once

#include "gurland/enclosure.hpp"
#include "gurland/special_functions.hpp"

namespace gurland {

/// Relative gap |x - y| <= kDegeneracyThreshold * max(x, y) below which a
/// point counts as diagonal for the mean-value parameter.
inline constexpr double kDegeneracyThreshold = 1e-9;

/// Partial-product length used when the product path acts as an oracle.
inline constexpr int kDefaultProductTerms = 10'000;

/// A validated argument pair (x, y), both positive and finite.
///
/// Derived quantities are computed from the canonically ordered pair so every
/// evaluator is bit-for-bit symmetric in (x, y).
class QueryPoint {
 public:
  QueryPoint(PositiveReal x, PositiveReal y);
  /// Throws DomainError("x must be > 0") / ("y must be > 0").
  QueryPoint(double x, double y);

  [[nodiscard]] double x() const noexcept { return x_; }
  [[nodiscard]] double y() const noexcept { return y_; }
  [[nodiscard]] double smaller() const noexcept { return x_ < y_ ? x_ : y_; }
  [[nodiscard]] double larger() const noexcept { return x_ < y_ ? y_ : x_; }

  /// A = (x + y) / 2.
  [[nodiscard]] double arithmetic_mean() const noexcept;
  /// √(xy), never rounded above the arithmetic mean.
  [[nodiscard]] double geometric_mean() const noexcept;
  /// |x - y| / 2. Only h² and |h| enter the formulas, so the sign is dropped.
  [[nodiscard]] double half_gap() const noexcept;
  /// A - √(xy), evaluated as (√x - √y)² / 2 to avoid cancellation.
  [[nodiscard]] double mean_gap() const noexcept;

  [[nodiscard]] bool is_diagonal() const noexcept { return x_ == y_; }
  [[nodiscard]] bool is_degenerate() const noexcept;

 private:
  double x_;
  double y_;
};

/// One factor of the Weierstrass-derived product,  G_n = 1 / (1 - c_n),
/// c_n = (h / (n + A))².
struct ProductTerm {
  int n;
  double c;
  double g;
};

ProductTerm product_term(const QueryPoint& p, int n);

/// G(x, y) = Γ(x) Γ(y) / Γ²((x + y)/2).
double gurland_ratio(const QueryPoint& p);

/// G⋆(x, y) = Γ(1+x) Γ(1+y) / Γ²(1 + (x+y)/2).
double modified_ratio(const QueryPoint& p);

/// ln G⋆ = ln Γ(1+x) + ln Γ(1+y) - 2 ln Γ(1+A), the reference value every
/// expansion path is checked against. The log-gamma second difference is
/// formed without cancellation, so the result keeps its relative accuracy as
/// x approaches y. Exactly 0 on the diagonal, otherwise >= 0.
double log_modified_ratio_direct(const QueryPoint& p);

/// Relative residual |G⋆ - 4xy/(x+y)² G| / G⋆ of the exact identity linking the
/// two ratios.
double check_relation(const QueryPoint& p);

/// Enclosure of ln G⋆ = Σ_{n>=1} -ln(1 - c_n): the first n_terms factors summed
/// directly, the rest sandwiched between T and T / (1 - c_{n_terms+1}) with
/// T = h² ζ(2, n_terms + 1 + A).
Enclosure log_modified_ratio_product(const QueryPoint& p, int n_terms = kDefaultProductTerms);

}  // namespace gurland
