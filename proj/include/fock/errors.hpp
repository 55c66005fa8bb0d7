#pragma once

#include <stdexcept>
#include <string>

namespace fock {

// Base class for everything this library throws on purpose.  The CLI maps
// these to exit code 2 (bad input / violated hypothesis), as opposed to
// exit code 1 which means "ran fine, tolerance check failed".
struct FockError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands live over different C^n.
struct DimensionMismatch : FockError {
  using FockError::FockError;
};

// Requested truncation basis would exceed the hard size cap.
struct BasisCapExceeded : FockError {
  using FockError::FockError;
};

// Symbol grows too fast against the Gaussian weight for the requested
// operation (matrix entries / integrals would diverge).
struct ConditionGViolation : FockError {
  using FockError::FockError;
};

// An input symbol fails a documented precondition of the operation.
struct HypothesisViolation : FockError {
  using FockError::FockError;
};

// Symbol is not a member of the weighted space the operation needs.
struct NotInSpace : FockError {
  using FockError::FockError;
};

// Iterative solver hit its iteration cap before reaching tolerance.
struct NoConvergence : FockError {
  using FockError::FockError;
};

// Integrand grows faster than the Gaussian quadrature weight can absorb.
struct GrowthExceedsWeight : FockError {
  using FockError::FockError;
};

// Malformed textual input (JSON symbols, CSV matrices, complex literals).
struct ParseError : FockError {
  using FockError::FockError;
};

}  // namespace fock
