#pragma once

#include <stdexcept>
#include <string>

namespace orbitlab {

// Base class for all library errors. The CLI maps subclasses to exit codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad or inconsistent user input (exit code 2 in the CLI).
struct ConfigError : Error {
  using Error::Error;
};

// A stated hypothesis of a theorem-backed run does not hold (exit code 3).
struct ScheduleViolation : Error {
  using Error::Error;
};

// A configured resource cap was exceeded (exit code 4).
struct EnumerationTooLarge : Error {
  using Error::Error;
};

// Adaptive precision hit its hard cap without resolving a comparison (exit 5).
struct PrecisionExhausted : Error {
  using Error::Error;
};

// numfield
struct DegenerateInput : ConfigError {
  using ConfigError::ConfigError;
};
struct NotIrreducible : ConfigError {
  using ConfigError::ConfigError;
};
struct NotTotallyReal : ConfigError {
  using ConfigError::ConfigError;
};
struct NotABasis : ConfigError {
  using ConfigError::ConfigError;
};
struct BadScalar : ConfigError {
  using ConfigError::ConfigError;
};
struct NotSquarefree : ConfigError {
  using ConfigError::ConfigError;
};

// lattice
struct DimensionTooLarge : ConfigError {
  using ConfigError::ConfigError;
};
struct BoundaryUndecidable : PrecisionExhausted {
  using PrecisionExhausted::PrecisionExhausted;
};
struct NotExact : ConfigError {
  using ConfigError::ConfigError;
};

// bestapprox
struct RationalCoordinate : ConfigError {
  using ConfigError::ConfigError;
};
struct NotSpanning : ConfigError {
  using ConfigError::ConfigError;
};
struct NotPrimitive : ConfigError {
  using ConfigError::ConfigError;
};
struct TieUnresolvable : Error {
  using Error::Error;
};

// padic
struct OutsideConvergenceDomain : ConfigError {
  using ConfigError::ConfigError;
};
struct PrecisionBelowResolution : Error {
  using Error::Error;
};
struct NoWitnessAtResolution : Error {
  using Error::Error;
};

// stats
struct SchemaMismatch : ConfigError {
  using ConfigError::ConfigError;
};

}  // namespace orbitlab
