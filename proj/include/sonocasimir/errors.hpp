#pragma once

#include <stdexcept>
#include <string>

namespace sono {

/// Argument outside the mathematical domain of an operation (z <= 0, NaN, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Argument inside the domain but outside the supported evaluation range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A computation that should have succeeded produced an unusable result.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a fixed angular-momentum truncation cannot represent the sum.
class TruncationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Quadrature failed to converge; distinct from an identity violation.
class QuadratureError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace sono
