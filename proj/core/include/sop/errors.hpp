#pragma once

#include <stdexcept>
#include <string>

namespace sop {

// Invalid input or contract violation. The CLI maps these to exit code 2.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Numerical failure during an otherwise valid computation. Exit code 3.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : ValidationError {
  using ValidationError::ValidationError;
};

struct ParseError : ValidationError {
  using ValidationError::ValidationError;
};

// Window functions whose coefficients do not close the canonical commutator.
struct NotCanonical : ValidationError {
  double residual;
  explicit NotCanonical(double residual_)
      : ValidationError("window functions are not canonical: residual = " +
                        std::to_string(residual_)),
        residual(residual_) {}
};

struct NonPositiveDefinite : NumericalError {
  using NumericalError::NumericalError;
};

struct NonPhysicalEigenvalue : NumericalError {
  using NumericalError::NumericalError;
};

struct UncertaintyViolation : NumericalError {
  using NumericalError::NumericalError;
};

// The mode is already pure (g = 0) and has no purification partner.
struct NoPartner : NumericalError {
  using NumericalError::NumericalError;
};

struct DegenerateMode : NumericalError {
  using NumericalError::NumericalError;
};

struct IllConditioned : NumericalError {
  using NumericalError::NumericalError;
};

}  // namespace sop
