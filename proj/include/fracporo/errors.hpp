#pragma once

#include <stdexcept>
#include <string>

namespace fracporo {

// Error taxonomy. The CLI maps ConfigError and its children to exit code 2
// and NumericalError to exit code 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid user configuration (scenario, boundary conditions, counts).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file.
class ParseError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// Input parsed but violates a structural invariant.
class ValidationError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// Fine mesh and coarse grid are geometrically incompatible.
class GeometryError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// Coefficient data out of its admissible range.
class DataError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// Caller broke a precondition (dimension mismatch, missing history, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Factorization failure or residual above tolerance.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace fracporo
