// Copyright 2026 The rindler-qi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace rqi {

// Invalid arguments are reported with std::invalid_argument throughout.

/// Normalizing (or otherwise dividing by the norm of) a zero state.
class DegenerateStateError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The Jacobi eigensolver ran out of sweeps.
class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const { return residual_; }

  private:
    double residual_;
};

/// A spectrum with eigenvalues too negative to be a physical state.
class InvalidSpectrumError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace rqi
