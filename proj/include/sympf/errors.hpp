#pragma once

#include <stdexcept>

namespace sympf {

// Caller supplied something outside an operation's precondition.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A safety bound (iteration count, matrix size) was hit.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sympf
