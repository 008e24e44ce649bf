#pragma once

#include <stdexcept>
#include <string>

namespace shellforge {

/// Raised when an operation's precondition on its arguments does not hold.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a guarantee that the mathematics promises fails to hold.
/// Seeing one of these means there is a bug in this library.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a search exhausts its state or time budget before reaching
/// a verdict. Never a claim about the answer.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace shellforge
