#pragma once

#include <stdexcept>
#include <string>

namespace plepair {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid excitation/detection arrangement (angle ranges, separations).
struct GeometryError : Error {
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

/// Malformed or incomplete configuration input.
struct ConfigError : Error {
  using Error::Error;
};

/// The Liouvillian kernel has dimension > 1; no unique steady state.
struct DegenerateSteadyState : Error {
  using Error::Error;
};

/// The trace-constrained linear system is rank-deficient.
struct SingularSolve : Error {
  using Error::Error;
};

/// Time integration did not settle within the requested horizon.
struct NotConverged : Error {
  using Error::Error;
};

/// Failure inside a spectral sweep, annotated with the offending grid point.
struct SolverError : Error {
  using Error::Error;
};

}  // namespace plepair
