#pragma once

#include <stdexcept>
#include <string>

namespace aeg {

/// Raised when an input violates an operation's precondition (malformed game,
/// invalid strategy or lasso, unparsable text, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an exhaustive enumeration would exceed its configured cap.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace aeg
