#pragma once

#include <iosfwd>

namespace gurland {

/// A closed interval [lo, hi] certified to contain some real quantity.
///
/// Both endpoints are finite and lo <= hi; the constructor rejects anything
/// else with DomainError. A default-constructed enclosure is the point [0, 0].
class Enclosure {
 public:
  constexpr Enclosure() = default;
  Enclosure(double lo, double hi);

  static Enclosure point(double value) { return {value, value}; }

  /// [center - radius, center + radius], widened outward by one ulp on each side
  /// so the rounding of the endpoint arithmetic cannot shrink it.
  static Enclosure around(double center, double radius);

  [[nodiscard]] constexpr double lo() const noexcept { return lo_; }
  [[nodiscard]] constexpr double hi() const noexcept { return hi_; }
  [[nodiscard]] constexpr double width() const noexcept { return hi_ - lo_; }
  [[nodiscard]] double midpoint() const noexcept;

  [[nodiscard]] constexpr bool contains(double value, double slack = 0.0) const noexcept {
    return lo_ - slack <= value && value <= hi_ + slack;
  }
  [[nodiscard]] constexpr bool intersects(const Enclosure& other) const noexcept {
    return lo_ <= other.hi_ && other.lo_ <= hi_;
  }

  friend constexpr bool operator==(const Enclosure&, const Enclosure&) = default;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

std::ostream& operator<<(std::ostream& os, const Enclosure& e);

}  // namespace gurland
