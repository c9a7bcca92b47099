#pragma once

#include <stdexcept>
#include <string>

namespace znp {

/// Malformed or invariant-violating input model.
class InvalidModel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition on an operation's arguments does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A search hit its configured resource cap. This is not a mathematical
/// failure: the answer exists, it was just not reached within the budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace znp
