#pragma once

#include <stdexcept>
#include <string>

namespace isotherm {

// Base of all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Point outside the admissible coordinate region, or outside a domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed argument (non-unit direction, bad shape parameters, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Evaluation at a singular configuration (sphere curvature at radius 0,
// degenerate surface gradient).
class SingularityError : public Error {
 public:
  using Error::Error;
};

// Spherical Moebius map evaluated at the preimage of the chart pole.
class PoleError : public Error {
 public:
  using Error::Error;
};

// Interpolation / integration / pullback requested outside the region where
// field data exists.
class CoverageError : public Error {
 public:
  using Error::Error;
};

// Grid too coarse: empty or disconnected interior, no level set, ...
class ResolutionError : public Error {
 public:
  using Error::Error;
};

// Linear solver failed to reach its tolerance.
class SolverError : public Error {
 public:
  using Error::Error;
};

// Explicit time step violates the stability bound.
class StabilityError : public Error {
 public:
  using Error::Error;
};

// Radial collocation oracle outside its reliable regime.
class OracleError : public Error {
 public:
  using Error::Error;
};

// A stated hypothesis of an asymptotic formula fails on the data.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// An operation's analytic precondition is not met by the inputs.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Extraction diagnostics indicate the data cannot support the fit.
class DiagnosticError : public Error {
 public:
  using Error::Error;
};

}  // namespace isotherm
