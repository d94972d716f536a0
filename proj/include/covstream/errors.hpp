#pragma once

#include <stdexcept>
#include <string>

namespace covstream {

/// Malformed input, bad parameter, or broken stream invariant. CLI exit code 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An id that does not reference a live set.
class LookupError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Enumeration or memory budget would be exceeded. CLI exit code 4.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, double combinations)
      : std::runtime_error(what), combinations_(combinations) {}
  double combinations() const noexcept { return combinations_; }

 private:
  double combinations_;
};

}  // namespace covstream
