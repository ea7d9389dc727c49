// Copyright 2026 the mixopt authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace mixopt {

// Caller broke a documented precondition (dimension mismatch, bad constant).
struct ContractViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The requested run is impossible as configured (unsatisfiable accuracy,
// malformed experiment file). Maps to exit code 2 in the CLI.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A numeric procedure failed (root not bracketed, factorization broke down).
// Maps to exit code 3 in the CLI.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An iterative solver ran out of budget; carries the last residuals.
struct ConvergenceError : NumericalError {
  ConvergenceError(const std::string& what, double residual_a,
                   double residual_b, int iterations)
      : NumericalError(what),
        residual_a(residual_a),
        residual_b(residual_b),
        iterations(iterations) {}
  double residual_a;
  double residual_b;
  int iterations;
};

}  // namespace mixopt
