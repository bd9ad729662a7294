#pragma once

#include <stdexcept>
#include <string>

namespace gmult {

// Arithmetic that has no exact answer: division by zero, a specialization
// whose denominator collapses, a remainder where exact division was promised.
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZero : public MathError {
 public:
  explicit DivisionByZero(const std::string& what) : MathError("division by zero: " + what) {}
};

// The request is well formed but lies outside what this library implements
// (for instance translations outside the coroot lattice).
class UnsupportedFeature : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A size cap (|W|, number of roots, k, integer range) would be exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace gmult
