#pragma once

#include <stdexcept>
#include <string>

namespace fhdet {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an operation (theta outside [0, 2pi), ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at a pole of Gamma.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Violated structural invariant of an input object (symbol, weight, config).
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Quadrature or iterative procedure failed to reach the requested tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A linear system that must be nonsingular was singular.
class SingularSystemError : public Error {
 public:
  using Error::Error;
};

/// The parameters violate the hypotheses of an asymptotic formula.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// A representation has alpha +- beta equal to a negative integer.
class DegenerateRepresentationError : public HypothesisError {
 public:
  using HypothesisError::HypothesisError;
};

/// Not enough usable data for a fit.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent configuration input.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace fhdet
