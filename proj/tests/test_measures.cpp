// Copyright 2026 The rindler-qi Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "rqi/check.hpp"
#include "rqi/errors.hpp"
#include "rqi/measures.hpp"

using namespace rqi;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = a + (b - a) * i / (n - 1);
    out.back() = b;
    return out;
}

}  // namespace

TEST_CASE("von_neumann_entropy") {
    CHECK(von_neumann_entropy(std::vector<double>{1.0, 0.0, 0.0}) == 0.0);
    CHECK(von_neumann_entropy(std::vector<double>{0.5, 0.5}) == 1.0);
    CHECK(von_neumann_entropy(std::vector<double>{0.25, 0.25, 0.25, 0.25}) == 2.0);
    // Tiny negative round-off is clipped, larger violations are rejected.
    CHECK(von_neumann_entropy(std::vector<double>{1.0, -5e-11}) == 0.0);
    CHECK_THROWS_AS(von_neumann_entropy(std::vector<double>{1.1, -1e-9}), InvalidSpectrumError);

    // alpha = 1/sqrt2, r = 0: spectrum {1/2, 1/2, 0 x 6}.
    const auto spec = eigenvalues_hermitian(reduced_alice_region_i({0.0, kInvSqrt2}));
    CHECK(std::abs(von_neumann_entropy(spec) - 1.0) < 1e-12);
}

TEST_CASE("negativity") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    // Product of two diagonal states is PPT.
    const double pa[] = {0.3, 0.7};
    const double pb[] = {0.1, 0.2, 0.3, 0.4};
    const DensityMatrix product({2, 4}, ComplexMatrix::diagonal(pa).kron(ComplexMatrix::diagonal(pb)));
    CHECK(negativity(product, 0) < 1e-15);
    CHECK(negativity(product, 1) < 1e-15);

    for (double alpha : {0.0, 0.4, 1.0})
        CHECK(std::abs(negativity(reduced_alice_region_i({0.0, alpha}), 0) - 0.5) < 1e-12);

    for (int trial = 0; trial < 20; ++trial) {
        const RindlerParams p(u(rng) * kMaxR, u(rng), 2.0 * kPi * u(rng) * 0.999);
        const auto rho = reduced_alice_region_i(p);
        CHECK(std::abs(negativity(rho, 0) - closed_form_negativity(p.r())) < 1e-12);
        // Negativity is symmetric in the choice of transposed party.
        CHECK(std::abs(negativity(rho, 1) - negativity(rho, 0)) < 1e-12);
    }
}

TEST_CASE("partial-transpose negative eigenvalues follow the closed form") {
    for (double alpha : {0.0, 0.3, kInvSqrt2, 0.9, 1.0})
        for (double r : linspace(0.0, kMaxR, 5)) {
            const RindlerParams p(r, alpha);
            auto ev = eigenvalues_hermitian(partial_transpose(reduced_alice_region_i(p), 0)).eigenvalues;
            const auto closed = closed_form_negative_eigenvalues(p);
            CHECK(std::abs(ev[7] - closed[0]) < 1e-12);
            CHECK(std::abs(ev[6] - closed[1]) < 1e-12);
        }
}

TEST_CASE("purity") {
    CHECK(std::abs(purity(density_from_pure(bell_state({0.3, 0.4, 1.0}))) - 1.0) < 1e-12);
    for (std::size_t d : {2, 4, 8}) {
        const DensityMatrix mixed(ComplexMatrix::identity(d) * Complex{1.0 / static_cast<double>(d)});
        CHECK(std::abs(purity(mixed) - 1.0 / static_cast<double>(d)) < 1e-15);
    }
    CHECK(std::abs(purity(reduced_alice_region_i({0.0, kInvSqrt2})) - 0.5) < 1e-12);
    CHECK(std::abs(purity(reduced_alice_region_i({0.0, 1.0})) - 1.0) < 1e-12);

    for (double alpha : {0.0, 0.5, 1.0})
        for (double r : linspace(0.0, kMaxR, 4)) {
            const auto rho = reduced_alice_region_i({r, alpha});
            double sq = 0.0;
            for (double l : eigenvalues_hermitian(rho).eigenvalues) sq += l * l;
            CHECK(std::abs(purity(rho) - sq) < 1e-12);
        }
}

TEST_CASE("rel_entropy_coherence") {
    const double p[] = {0.1, 0.2, 0.3, 0.4};
    CHECK(std::abs(rel_entropy_coherence(DensityMatrix(ComplexMatrix::diagonal(p)))) < 1e-15);

    CHECK(std::abs(rel_entropy_coherence(reduced_alice_region_i({0.0, 1.0})) - 1.0) < 1e-12);
    // 30-digit reference: 1.5 - H(3/4, 1/4).
    CHECK(std::abs(rel_entropy_coherence(reduced_alice_region_i({kMaxR, 1.0})) -
                   0.688721875540867136090304207961) < 1e-12);
    // Independent of alpha at fixed r.
    for (double r : linspace(0.0, kMaxR, 6)) {
        const double ref = rel_entropy_coherence(reduced_alice_region_i({r, 1.0}));
        for (double alpha : {0.0, 0.2, kInvSqrt2, 0.95})
            CHECK(std::abs(rel_entropy_coherence(reduced_alice_region_i({r, alpha})) - ref) < 1e-12);
    }
}

TEST_CASE("closed_form_spectrum") {
    const auto pure = closed_form_spectrum({0.0, 1.0});
    CHECK(pure == std::vector<double>{1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0});

    const auto mid = closed_form_spectrum({kMaxR, kInvSqrt2});
    const std::vector<double> expected{0.375, 0.375, 0.125, 0.125, 0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(mid[i] - expected[i]) < 1e-15);

    for (double alpha : linspace(0.0, 1.0, 7))
        for (double r : linspace(0.0, kMaxR, 7)) {
            double sum = 0.0;
            for (double l : closed_form_spectrum({r, alpha})) sum += l;
            CHECK(std::abs(sum - 1.0) < 1e-15);
        }
}

TEST_CASE("closed_form_negativity") {
    CHECK(closed_form_negativity(0.0) == 0.5);
    CHECK(std::abs(closed_form_negativity(kMaxR) - 0.25) < 1e-16);
    double prev = 1.0;
    for (double r : linspace(0.0, kMaxR, 50)) {
        CHECK(closed_form_negativity(r) < prev);
        prev = closed_form_negativity(r);
    }
    CHECK_THROWS_AS(closed_form_negativity(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_negativity(0.8), std::invalid_argument);
}

TEST_CASE("measure_all at a generic point matches high-precision references") {
    // alpha = 0.3, r = pi/8, references evaluated from the closed-form
    // spectrum and diagonal at 30 digits.
    const auto m = measure_all({kPi / 8, 0.3, 1.0});
    CHECK(std::abs(m.entropy - 0.814308682090396364768590404301) < 1e-12);
    CHECK(std::abs(m.purity - 0.722708172607047759975996513898) < 1e-12);
    CHECK(std::abs(m.coherence - 0.922599153320134664998097372642) < 1e-12);
    CHECK(std::abs(m.negativity - 0.426776695296636881100211090526) < 1e-12);
}

TEST_CASE("entropy decomposes into the alpha = 1 entropy plus h(alpha^2)") {
    for (double alpha : {0.0, 0.3, kInvSqrt2, 0.9, 1.0})
        for (double r : linspace(0.0, kMaxR, 5)) {
            const double s = measure_all({r, alpha}).entropy;
            const double s1 = measure_all({r, 1.0}).entropy;
            CHECK(std::abs(s - s1 - binary_entropy(alpha * alpha)) < 1e-9);
        }
}

TEST_CASE("invariant suites pass on the shipped pipeline") {
    for (const auto& result : check::run_all()) {
        INFO(result.name << ": " << result.detail);
        CHECK(result.passed);
    }
}

TEST_CASE("mutation: an asymmetric alpha^2 coupling breaks the spectrum oracle") {
    // Non-Hermitian variant: alpha^2 cos r / 2 at (0_A,0_-k | 1_A,1_-k) while
    // its mirror keeps beta^2 cos r / 2.
    const auto asymmetric = [](const RindlerParams& p) {
        auto m = closed_form_reduced_density(p);
        m(1, 7) = p.alpha() * p.alpha() * std::cos(p.r()) / 2.0;
        return m;
    };
    CHECK_FALSE(check::measures_spectrum_oracle(asymmetric).passed);

    // Making it Hermitian with alpha^2 on both sides still fails.
    const auto alpha_both = [](const RindlerParams& p) {
        auto m = closed_form_reduced_density(p);
        m(1, 7) = m(7, 1) = p.alpha() * p.alpha() * std::cos(p.r()) / 2.0;
        return m;
    };
    const auto result = check::measures_spectrum_oracle(alpha_both);
    CHECK_FALSE(result.passed);
    CHECK(result.detail.find("eigenvalue") != std::string::npos);

    CHECK(check::measures_spectrum_oracle([](const RindlerParams& p) {
              return closed_form_reduced_density(p);
          }).passed);
}
