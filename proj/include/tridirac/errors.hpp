#pragma once

#include <stdexcept>
#include <string>

namespace tridirac {

/// Input violates a documented parameter constraint.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical procedure failed (root polishing, non-finite integrand, zero pivot).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tridirac
