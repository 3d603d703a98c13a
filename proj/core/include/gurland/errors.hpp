#pragma once

#include <stdexcept>

namespace gurland {

// Argument outside the mathematical domain (non-positive, non-finite, odd exponent, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Result not representable in binary64, or a table index out of its supported range.
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

// An iterative evaluation hit its term cap before meeting the stopping rule.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// x and y coincide (to the degeneracy threshold), so the mean-value parameter is undetermined.
class DegeneratePoint : public DomainError {
 public:
  using DomainError::DomainError;
};

// The root bracket did not have the required sign change. This indicates an
// upstream accuracy bug, never a legitimate outcome.
class BracketFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gurland
