// Copyright 2026 The rindler-qi Authors
// SPDX-License-Identifier: Apache-2.0

#include "rqi/measures.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "rqi/errors.hpp"

namespace rqi {

double von_neumann_entropy(std::span<const double> eigenvalues) {
    double s = 0.0;
    for (double l : eigenvalues) {
        if (l < -kClipTolerance) {
            throw InvalidSpectrumError("negative eigenvalue " + std::to_string(l) +
                                       " in entropy input");
        }
        if (l > 0.0) s -= l * std::log2(l);
    }
    return s;
}

double von_neumann_entropy(const Spectrum& spectrum) {
    return von_neumann_entropy(spectrum.eigenvalues);
}

double negativity(const DensityMatrix& rho, std::size_t subsystem) {
    const auto spectrum = eigenvalues_hermitian(partial_transpose(rho, subsystem));
    double n = 0.0;
    for (double l : spectrum.eigenvalues)
        if (l < 0.0) n -= l;
    return n;
}

double purity(const DensityMatrix& rho) {
    // Tr[rho^2] = sum_ij rho_ij rho_ji
    const auto& m = rho.matrix();
    Complex sum{};
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) sum += m(i, j) * m(j, i);
    return sum.real();
}

double rel_entropy_coherence(const DensityMatrix& rho) {
    const auto& m = rho.matrix();
    std::vector<double> diagonal(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) diagonal[i] = m(i, i).real();
    return von_neumann_entropy(diagonal) - von_neumann_entropy(eigenvalues_hermitian(rho));
}

double binary_entropy(double x) {
    const double pair[] = {x, 1.0 - x};
    return von_neumann_entropy(pair);
}

DensityMatrix reduced_alice_region_i(const RindlerParams& p) {
    return partial_trace(density_from_pure(bell_state(p)), {0, 1});
}

MeasureReport measure_all(const RindlerParams& p) {
    const DensityMatrix rho = reduced_alice_region_i(p);
    const Spectrum spectrum = eigenvalues_hermitian(rho);
    return {von_neumann_entropy(spectrum), negativity(rho, 0), purity(rho),
            rel_entropy_coherence(rho), p};
}

std::vector<double> closed_form_spectrum(const RindlerParams& p) {
    const double a2 = p.alpha() * p.alpha();
    const double b2 = 1.0 - a2;
    const double s2 = std::sin(p.r()) * std::sin(p.r());
    const double c2r = std::cos(2.0 * p.r());
    std::vector<double> out{0.0,
                            0.0,
                            0.0,
                            0.0,
                            b2 * s2 / 2.0,
                            a2 * s2 / 2.0,
                            a2 * (3.0 + c2r) / 4.0,
                            b2 * (3.0 + c2r) / 4.0};
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<double> closed_form_negative_eigenvalues(const RindlerParams& p) {
    const double a2 = p.alpha() * p.alpha();
    const double b2 = 1.0 - a2;
    const double c2r = std::cos(2.0 * p.r());
    std::vector<double> out{-b2 * (1.0 + c2r) / 4.0, -a2 * (1.0 + c2r) / 4.0};
    std::sort(out.begin(), out.end());
    return out;
}

double closed_form_negativity(double r) {
    if (!(r >= 0.0 && r <= kMaxR)) throw std::invalid_argument("r must lie in [0, pi/4]");
    const double c = std::cos(r);
    return c * c / 2.0;
}

ComplexMatrix closed_form_reduced_density(const RindlerParams& p) {
    const double a2 = p.alpha() * p.alpha();
    const double b2 = p.beta() * p.beta();
    const double c = std::cos(p.r());
    const double s = std::sin(p.r());
    // Rows: |0A,0k> |0A,0-k> |0A,1k> |0A,1-k> |1A,0k> |1A,0-k> |1A,1k> |1A,1-k>
    ComplexMatrix m(8);
    m(0, 0) = a2 * c * c / 2.0;
    m(1, 1) = b2 * c * c / 2.0;
    m(2, 2) = a2 * s * s / 2.0;
    m(3, 3) = b2 * s * s / 2.0;
    m(6, 6) = a2 / 2.0;
    m(7, 7) = b2 / 2.0;
    m(0, 6) = m(6, 0) = a2 * c / 2.0;
    m(1, 7) = m(7, 1) = b2 * c / 2.0;
    return m;
}

}  // namespace rqi
