#pragma once

#include <stdexcept>
#include <string>

namespace armsrace {

// Thrown when inputs violate declared ranges (parameter construction,
// scenario parsing, out-of-domain arguments).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Base for failures that arise during a computation on valid inputs.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configuration with no meaningful answer (e.g. zero signal budget).
class SingularConfiguration : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

// Closed-form branch requested where the interior branch is inactive.
class CornerBranchError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

// Stability analysis requested at a corner equilibrium.
class CornerEquilibriumError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

// Sensitivity denominator vanished; the implicit-function ratio is undefined.
class DegenerateSensitivityError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

// ODE integration produced a non-finite state; carries the last good state.
class IntegrationFailure : public ComputationError {
 public:
  IntegrationFailure(const std::string& what, double t, double d, double a)
      : ComputationError(what), t(t), d(d), a(a) {}
  double t, d, a;
};

// Filesystem failures while emitting results.
class IoError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

}  // namespace armsrace
