// Copyright 2026 The rindler-qi Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file check.hpp
 * @brief Self-check suites covering the library invariants on fixed grids.
 *
 * Every suite is deterministic. A suite stops at its first failing assertion
 * and reports the values involved.
 */

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rqi/matrix.hpp"
#include "rqi/unruh.hpp"

namespace rqi::check {

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::string detail;  ///< first failing assertion, empty on success
};

/// The 5 x 5 x 3 (alpha, r, phi) grid shared by the measure suites.
std::vector<RindlerParams> default_grid();

/// Produces rho_{A,I} for a parameter point; the default runs the full
/// state -> projector -> partial trace pipeline.
using ReducedDensityFn = std::function<ComplexMatrix(const RindlerParams&)>;
ComplexMatrix numerical_reduced_density(const RindlerParams& p);

SuiteResult fock_exclusion();
SuiteResult fock_sector_anticommutation();
SuiteResult fock_cross_tag_nilpotence();
SuiteResult fock_linearity();
SuiteResult fock_adjoint_consistency();

SuiteResult unruh_vacuum_annihilation();
SuiteResult unruh_thermality();
SuiteResult unruh_operator_vs_closed_form();
SuiteResult unruh_norm_preservation();
SuiteResult unruh_momentum_symmetry();

SuiteResult density_trace_preservation();
SuiteResult density_hermiticity_closure();
SuiteResult density_spectrum_residual();
SuiteResult density_eigen_sums();
SuiteResult density_pure_purity();
SuiteResult density_complementarity();

SuiteResult measures_spectrum_oracle(const ReducedDensityFn& reduced = numerical_reduced_density);
SuiteResult measures_negativity_oracle(
    const ReducedDensityFn& reduced = numerical_reduced_density);
SuiteResult measures_entropy_decomposition();
SuiteResult measures_coherence_alpha_invariance();
SuiteResult measures_phi_invariance();
SuiteResult measures_monotonicity();
SuiteResult measures_purity_floor();

/// Every suite above, in declaration order.
std::vector<SuiteResult> run_all();

}  // namespace rqi::check
