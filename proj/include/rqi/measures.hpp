// Copyright 2026 The rindler-qi Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file measures.hpp
 * @brief Entropy, negativity, purity and relative entropy of coherence for
 *        the Alice / region-I reduced state, plus closed-form references.
 *
 * Entropies are in bits. Coherence is measured in the canonical product basis
 * |a_A, n_{+-k}> listed in fock.hpp.
 */

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rqi/density.hpp"
#include "rqi/unruh.hpp"

namespace rqi {

/// Eigenvalues in [-kPsdTolerance, 0) are treated as zero before any log.
inline constexpr double kClipTolerance = 1e-10;

/// -sum l log2 l. Throws InvalidSpectrumError for l < -kClipTolerance.
double von_neumann_entropy(std::span<const double> eigenvalues);
double von_neumann_entropy(const Spectrum& spectrum);

/// Sum of |l| over the negative eigenvalues of the partial transpose.
double negativity(const DensityMatrix& rho, std::size_t subsystem);

/// Re Tr[rho^2].
double purity(const DensityMatrix& rho);

/// S(diag rho) - S(rho).
double rel_entropy_coherence(const DensityMatrix& rho);

/// Binary entropy h(x) in bits.
double binary_entropy(double x);

/// rho_{A,I}: the Bell-state projector with region II traced out.
DensityMatrix reduced_alice_region_i(const RindlerParams& p);

struct MeasureReport {
    double entropy;
    double negativity;
    double purity;
    double coherence;
    RindlerParams params;
};

MeasureReport measure_all(const RindlerParams& p);

// Closed-form references -------------------------------------------------

/// Eigenvalues of rho_{A,I}, sorted descending.
std::vector<double> closed_form_spectrum(const RindlerParams& p);

/// The two eigenvalues of the partial transpose that can go negative,
/// sorted ascending: {-beta^2 cos^2 r / 2, -alpha^2 cos^2 r / 2}.
std::vector<double> closed_form_negative_eigenvalues(const RindlerParams& p);

/// cos^2(r) / 2. Throws for r outside [0, pi/4].
double closed_form_negativity(double r);

/**
 * rho_{A,I} written out entry by entry. Both (0_A,0_-k | 1_A,1_-k) couplings
 * carry beta^2 cos r / 2; this is the Hermitian form consistent with tracing
 * region II out of the Bell state.
 */
ComplexMatrix closed_form_reduced_density(const RindlerParams& p);

}  // namespace rqi
