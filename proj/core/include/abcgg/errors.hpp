#pragma once

#include <stdexcept>
#include <string>

namespace abcgg {

// Input violates a documented precondition: bad parameters, malformed
// files, loops, disconnected graphs where connectivity is required.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Request exceeds a configured resource limit (enumeration order,
// certificate order, integer range).
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Closed-form evaluation outside the parameter ranges the formulas are
// stated for (parity and range constraints on k, x, n).
class FormulaDomainError : public DomainError {
 public:
  FormulaDomainError(std::string formula, std::string parameter,
                     std::string valid_range)
      : DomainError(formula + ": parameter " + parameter +
                    " outside valid range (" + valid_range + ")"),
        formula(std::move(formula)),
        parameter(std::move(parameter)),
        valid_range(std::move(valid_range)) {}

  std::string formula;
  std::string parameter;
  std::string valid_range;
};

}  // namespace abcgg
