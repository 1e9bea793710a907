#pragma once

#include <stdexcept>

namespace burgers {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected input (bad parameters, out-of-domain arguments).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure: residual out of tolerance, vanishing denominator,
/// scheme blow-up. Indicates a computation that cannot be trusted.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A root scan exhausted its window without bracketing the expected roots.
/// The message carries the scanned interval, step, and boundary residuals.
class BracketingError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Oscillation-theorem certification failed: an eigenfunction's interior
/// zero count disagrees with its index. Always an internal inconsistency.
class CertificationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace burgers
