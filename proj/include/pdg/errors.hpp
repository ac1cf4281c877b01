#pragma once

#include <stdexcept>
#include <string>

namespace pdg {

/// Invalid input data (bad exponent configuration, malformed field, ...).
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Operation called for the wrong growth regime.
struct RegimeError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Cylinder/grid geometry mismatch (escapes domain, nesting violated, ...).
struct GeometryError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Explicit time stepping refused: the supplied step is too large.
struct StabilityError : std::runtime_error {
  double suggested_tau;
  StabilityError(const std::string& what, double tau_ok)
      : std::runtime_error(what), suggested_tau(tau_ok) {}
};

/// Internal numerical failure (NaN, violated hard invariant).
struct NumericsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pdg
