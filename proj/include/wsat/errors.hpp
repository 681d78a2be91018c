#pragma once

#include <stdexcept>
#include <string>

namespace wsat {

// Malformed or out-of-contract input: bad parameters, unknown vertices, arity mismatch.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A search hit its configured limits before reaching a conclusive answer.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wsat
