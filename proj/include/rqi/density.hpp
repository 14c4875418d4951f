// Copyright 2026 The rindler-qi Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file density.hpp
 * @brief Density matrices over tensor-product layouts: outer products,
 *        partial trace, partial transpose and a cyclic complex Jacobi
 *        eigensolver for Hermitian matrices.
 */

#pragma once

#include <cstddef>
#include <vector>

#include "rqi/fock.hpp"
#include "rqi/matrix.hpp"

namespace rqi {

/**
 * Square matrix with a subsystem layout (dimensions, slowest index first) and
 * optional per-row basis labels. Labels are present for matrices derived from
 * StateVectors and absent for matrices built directly from numbers.
 *
 * Positivity, trace and Hermiticity are not enforced here: partial transposes
 * are legitimately non-positive. Use validate_density for diagnostics.
 */
class DensityMatrix {
  public:
    DensityMatrix(std::vector<std::size_t> dims, ComplexMatrix entries,
                  std::vector<BasisKet> basis = {});

    /// Unlabeled matrix with a single subsystem.
    explicit DensityMatrix(ComplexMatrix entries);

    const std::vector<std::size_t>& dims() const { return dims_; }
    const ComplexMatrix& matrix() const { return entries_; }
    const std::vector<BasisKet>& basis() const { return basis_; }
    std::size_t size() const { return entries_.size(); }
    Complex operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

  private:
    std::vector<std::size_t> dims_;
    ComplexMatrix entries_;
    std::vector<BasisKet> basis_;
};

struct Spectrum {
    std::vector<double> eigenvalues;  ///< sorted descending
    double max_residual = 0.0;        ///< max_i ||M v_i - l_i v_i||_2
    int sweeps_used = 0;
};

struct Eigensystem {
    Spectrum spectrum;
    ComplexMatrix vectors;  ///< column i pairs with spectrum.eigenvalues[i]
};

/// |s><s| in canonical basis order. Throws for unnormalized s.
DensityMatrix density_from_pure(const StateVector& s);

/// Traces out every subsystem not listed in `keep`. Kept subsystems stay in
/// their original order.
DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<std::size_t> keep);

/// Transposes the indices of one subsystem.
DensityMatrix partial_transpose(const DensityMatrix& rho, std::size_t subsystem);

inline constexpr double kJacobiTolerance = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;

/**
 * Cyclic Jacobi diagonalization with complex-phase rotations.
 *
 * Iterates full sweeps until the off-diagonal Frobenius norm drops below
 * `tol * max(1, ||M||_F)` and reports the eigenpair residual measured against
 * the input. Throws std::invalid_argument if M deviates from Hermitian by more
 * than 1e-12 and ConvergenceError after kJacobiMaxSweeps sweeps.
 */
Eigensystem eigensystem_hermitian(const ComplexMatrix& m, double tol = kJacobiTolerance);
Spectrum eigenvalues_hermitian(const ComplexMatrix& m, double tol = kJacobiTolerance);
Spectrum eigenvalues_hermitian(const DensityMatrix& rho, double tol = kJacobiTolerance);

struct DensityDiagnostics {
    double trace_deviation = 0.0;
    double hermiticity_deviation = 0.0;
    double min_eigenvalue = 0.0;
    bool psd_ok = true;
};

inline constexpr double kPsdTolerance = 1e-10;

/// Never throws for square input; the spectrum is taken of the Hermitian part.
DensityDiagnostics validate_density(const DensityMatrix& rho);

}  // namespace rqi
