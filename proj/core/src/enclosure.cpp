#include "gurland/enclosure.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "gurland/errors.hpp"

namespace gurland {

Enclosure::Enclosure(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw RangeError("enclosure endpoints must be finite");
  }
  if (lo > hi) {
    throw DomainError("enclosure requires lo <= hi (got [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "])");
  }
}

Enclosure Enclosure::around(double center, double radius) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return {std::nextafter(center - radius, -inf), std::nextafter(center + radius, inf)};
}

double Enclosure::midpoint() const noexcept { return lo_ + 0.5 * (hi_ - lo_); }

std::ostream& operator<<(std::ostream& os, const Enclosure& e) {
  return os << '[' << e.lo() << ", " << e.hi() << ']';
}

}  // namespace gurland
