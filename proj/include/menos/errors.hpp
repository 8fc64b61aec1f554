#pragma once

#include <stdexcept>
#include <string>

namespace menos {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or non-finite input data (bad matrix entries, bad JSON shape).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A parameter is outside its documented domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Operands have incompatible dimensions or outcome counts.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// The supplied states do not form an orthonormal basis.
class InvalidBasis : public Error {
 public:
  using Error::Error;
};

/// A matrix required to be PSD has a significantly negative eigenvalue.
class NotPositiveSemidefinite : public Error {
 public:
  using Error::Error;
};

/// The state derivative leaves the support of the state inconsistently.
class SupportViolation : public Error {
 public:
  using Error::Error;
};

/// A pure-state model with vanishing quantum Fisher information.
class DegenerateModel : public Error {
 public:
  using Error::Error;
};

/// Susceptibility is undefined (zero or non-finite Fisher information,
/// or a single-outcome measurement).
class UndefinedSusceptibility : public Error {
 public:
  using Error::Error;
};

/// Internal consistency check failed beyond numerical tolerance.
class NumericalInconsistency : public Error {
 public:
  using Error::Error;
};

/// A constrained search found no admissible evaluation point.
class NoFeasiblePoint : public Error {
 public:
  using Error::Error;
};

}  // namespace menos
