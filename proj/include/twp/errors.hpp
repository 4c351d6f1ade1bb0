#pragma once

#include <stdexcept>
#include <string>

namespace twp {

// Invalid input: bad shapes, out-of-range parameters, inadmissible topologies.
class UserError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation was refused because it would exceed the monomial budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A cache file is corrupt, truncated, or written by another format version.
class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace twp
