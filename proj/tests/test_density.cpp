// Copyright 2026 The rindler-qi Authors
// SPDX-License-Identifier: Apache-2.0

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "rqi/density.hpp"
#include "rqi/errors.hpp"
#include "rqi/measures.hpp"
#include "rqi/unruh.hpp"

using namespace rqi;

namespace {

ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> g;
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = g(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = {g(rng), g(rng)};
            m(j, i) = std::conj(m(i, j));
        }
    }
    return m;
}

ComplexMatrix random_state(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> g;
    ComplexMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = {g(rng), g(rng)};
    ComplexMatrix rho = a * a.adjoint();
    return rho * Complex{1.0 / rho.trace().real()};
}

// Reference eigenvalues from Eigen's self-adjoint solver, sorted descending.
std::vector<double> eigen_reference(const ComplexMatrix& m) {
    const auto n = static_cast<Eigen::Index>(m.size());
    Eigen::MatrixXcd e(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) e(i, j) = m(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(e, Eigen::EigenvaluesOnly);
    std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

// rho_{A,I} straight from Bell-state amplitudes: sum over region-II index.
ComplexMatrix brute_force_reduced(const StateVector& s) {
    Complex psi[2][4][4] = {};
    for (const auto& [ket, amp] : s)
        psi[sector_index(*ket.alice)][sector_index(*ket.region_i)][sector_index(*ket.region_ii)] = amp;
    ComplexMatrix out(8);
    for (int a = 0; a < 2; ++a)
        for (int i = 0; i < 4; ++i)
            for (int b = 0; b < 2; ++b)
                for (int j = 0; j < 4; ++j)
                    for (int k = 0; k < 4; ++k)
                        out(4 * a + i, 4 * b + j) += psi[a][i][k] * std::conj(psi[b][j][k]);
    return out;
}

DensityMatrix bell_projector_2x2() {
    ComplexMatrix m(4);
    m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
    return {{2, 2}, m};
}

}  // namespace

TEST_CASE("DensityMatrix construction checks its layout") {
    CHECK_THROWS_AS(DensityMatrix({2, 3}, ComplexMatrix(5)), std::invalid_argument);
    CHECK_THROWS_AS(DensityMatrix({}, ComplexMatrix(1)), std::invalid_argument);
    CHECK_THROWS_AS(DensityMatrix({2}, ComplexMatrix(2), all_basis_kets(Layout::Rob)),
                    std::invalid_argument);
    CHECK_NOTHROW(DensityMatrix({2, 2}, ComplexMatrix(4)));
}

TEST_CASE("density_from_pure") {
    SUBCASE("single ket") {
        StateVector s(Layout::Rob);
        const auto ket = rob_ket(Momentum::MinusK, 1, Momentum::PlusK, 0);
        s.add(ket, Complex{0.0, 1.0});
        const auto rho = density_from_pure(s);
        const auto idx = ket_index(ket);
        CHECK(rho.dims() == std::vector<std::size_t>{4, 4});
        for (std::size_t i = 0; i < 16; ++i)
            for (std::size_t j = 0; j < 16; ++j)
                CHECK(rho(i, j) == (i == idx && j == idx ? Complex{1.0} : Complex{}));
        CHECK(rho.basis()[idx] == ket);
    }
    SUBCASE("equal superposition gives a 2x2 block of 1/2") {
        StateVector s(Layout::Rob);
        const auto a = rob_ket(Momentum::PlusK, 0, Momentum::MinusK, 0);
        const auto b = rob_ket(Momentum::PlusK, 1, Momentum::MinusK, 1);
        s.add(a, 1.0 / std::sqrt(2.0));
        s.add(b, 1.0 / std::sqrt(2.0));
        const auto rho = density_from_pure(s);
        for (auto i : {ket_index(a), ket_index(b)})
            for (auto j : {ket_index(a), ket_index(b)})
                CHECK(std::abs(rho(i, j) - 0.5) < 1e-15);
        CHECK(std::abs(rho.matrix().trace() - 1.0) < 1e-15);
    }
    SUBCASE("unnormalized input is rejected") {
        StateVector s(Layout::Rob);
        s.add(rob_ket(Momentum::PlusK, 0, Momentum::MinusK, 0), 0.5);
        CHECK_THROWS_AS(density_from_pure(s), std::invalid_argument);
    }
}

TEST_CASE("partial_trace") {
    SUBCASE("product state keeps its factor") {
        std::mt19937_64 rng(11);
        const auto a = random_state(rng, 2);
        const auto b = random_state(rng, 4);
        const DensityMatrix rho({2, 4}, a.kron(b));
        CHECK(partial_trace(rho, {0}).matrix().max_abs_diff(a) < 1e-15);
        CHECK(partial_trace(rho, {1}).matrix().max_abs_diff(b) < 1e-15);
    }
    SUBCASE("Bell projector reduces to the maximally mixed qubit") {
        const auto reduced = partial_trace(bell_projector_2x2(), {0}).matrix();
        const double half[] = {0.5, 0.5};
        CHECK(reduced.max_abs_diff(ComplexMatrix::diagonal(half)) == 0.0);
    }
    SUBCASE("Bell state of the model matches a direct amplitude contraction") {
        for (double alpha : {0.0, 0.3, 0.8, 1.0})
            for (double r : {0.0, 0.2, kMaxR})
                for (double phi : {0.0, 2.5}) {
                    const auto s = bell_state({r, alpha, phi});
                    const auto rho = partial_trace(density_from_pure(s), {0, 1});
                    CHECK(rho.dims() == std::vector<std::size_t>{2, 4});
                    CHECK(rho.matrix().max_abs_diff(brute_force_reduced(s)) < 1e-15);
                    CHECK(rho.matrix().max_abs_diff(closed_form_reduced_density({r, alpha, phi})) <
                          1e-15);
                }
    }
    SUBCASE("reduced basis labels follow the listing order") {
        const auto rho = partial_trace(density_from_pure(bell_state({0.1, 0.5})), {0, 1});
        REQUIRE(rho.basis().size() == 8);
        const char* expected[] = {"|0_A,0_k>",  "|0_A,0_-k>", "|0_A,1_k>",  "|0_A,1_-k>",
                                  "|1_A,0_k>",  "|1_A,0_-k>", "|1_A,1_k>",  "|1_A,1_-k>"};
        for (std::size_t i = 0; i < 8; ++i) CHECK(to_string(rho.basis()[i]) == expected[i]);
        const auto rho2 = partial_trace(density_from_pure(bell_state({0.1, 0.5})), {2});
        CHECK(to_string(rho2.basis()[3]) == "|1_-k>");
    }
    SUBCASE("invalid keep sets") {
        const auto rho = bell_projector_2x2();
        CHECK_THROWS_AS(partial_trace(rho, {}), std::invalid_argument);
        CHECK_THROWS_AS(partial_trace(rho, {2}), std::invalid_argument);
        CHECK_THROWS_AS(partial_trace(rho, {0, 0}), std::invalid_argument);
    }
}

TEST_CASE("property: partial trace preserves trace and Hermiticity") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 10; ++trial) {
        const DensityMatrix rho({2, 4, 4}, random_state(rng, 32));
        for (const auto& keep : std::vector<std::vector<std::size_t>>{{0}, {1}, {2}, {0, 2}, {1, 2}, {0, 1, 2}}) {
            const auto out = partial_trace(rho, keep);
            CHECK(std::abs(out.matrix().trace() - 1.0) < 1e-12);
            CHECK(out.matrix().hermiticity_deviation() < 1e-12);
        }
        CHECK(partial_trace(rho, {0, 1, 2}).matrix().max_abs_diff(rho.matrix()) == 0.0);
    }
}

TEST_CASE("partial_transpose") {
    SUBCASE("textbook Bell projector") {
        const auto pt = partial_transpose(bell_projector_2x2(), 0);
        const auto spec = eigenvalues_hermitian(pt).eigenvalues;
        const std::vector<double> expected{0.5, 0.5, 0.5, -0.5};
        for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(spec[i] - expected[i]) < 1e-14);
    }
    SUBCASE("product states keep their spectrum") {
        std::mt19937_64 rng(13);
        const auto a = random_state(rng, 2);
        const auto b = random_state(rng, 4);
        const DensityMatrix rho({2, 4}, a.kron(b));
        const auto before = eigenvalues_hermitian(rho).eigenvalues;
        const auto after = eigenvalues_hermitian(partial_transpose(rho, 0)).eigenvalues;
        for (std::size_t i = 0; i < before.size(); ++i) CHECK(std::abs(before[i] - after[i]) < 1e-12);
        CHECK(after.back() > -1e-12);
    }
    SUBCASE("matches an explicit index swap and is an involution") {
        std::mt19937_64 rng(14);
        const DensityMatrix rho({2, 4, 4}, random_state(rng, 32));
        for (std::size_t sub = 0; sub < 3; ++sub) {
            const auto pt = partial_transpose(rho, sub);
            const std::size_t dims[] = {2, 4, 4};
            for (std::size_t i = 0; i < 32; ++i)
                for (std::size_t j = 0; j < 32; ++j) {
                    std::size_t di[] = {i / 16, (i / 4) % 4, i % 4};
                    std::size_t dj[] = {j / 16, (j / 4) % 4, j % 4};
                    std::swap(di[sub], dj[sub]);
                    const auto ti = (di[0] * dims[1] + di[1]) * dims[2] + di[2];
                    const auto tj = (dj[0] * dims[1] + dj[1]) * dims[2] + dj[2];
                    CHECK(pt(ti, tj) == rho(i, j));
                }
            CHECK(partial_transpose(pt, sub).matrix() == rho.matrix());
            CHECK(std::abs(pt.matrix().trace() - 1.0) < 1e-12);
            CHECK(pt.matrix().hermiticity_deviation() < 1e-12);
        }
    }
    SUBCASE("invalid subsystem") {
        CHECK_THROWS_AS(partial_transpose(bell_projector_2x2(), 2), std::invalid_argument);
    }
}

TEST_CASE("eigenvalues_hermitian: closed forms") {
    const double diag[] = {0.3, -2.0, 5.0, 0.0};
    const auto d = eigenvalues_hermitian(ComplexMatrix::diagonal(diag));
    CHECK(d.eigenvalues == std::vector<double>{5.0, 0.3, 0.0, -2.0});
    CHECK(d.sweeps_used == 0);

    const double a = 0.7;
    const double b = -0.25;
    ComplexMatrix m(2);
    m(0, 0) = m(1, 1) = a;
    m(0, 1) = m(1, 0) = b;
    const auto s = eigenvalues_hermitian(m);
    CHECK(std::abs(s.eigenvalues[0] - (a - b)) < 1e-15);
    CHECK(std::abs(s.eigenvalues[1] - (a + b)) < 1e-15);

    // Complex off-diagonal phase: eigenvalues of [[1, i], [-i, 1]] are {2, 0}.
    ComplexMatrix c(2);
    c(0, 0) = c(1, 1) = 1.0;
    c(0, 1) = Complex{0.0, 1.0};
    c(1, 0) = Complex{0.0, -1.0};
    const auto cs = eigensystem_hermitian(c);
    CHECK(std::abs(cs.spectrum.eigenvalues[0] - 2.0) < 1e-15);
    CHECK(std::abs(cs.spectrum.eigenvalues[1]) < 1e-15);
    CHECK(cs.spectrum.max_residual < 1e-15);
}

TEST_CASE("eigenvalues_hermitian: reduced density reproduces the closed-form spectrum") {
    for (double alpha : {0.0, 0.3, 1.0 / std::sqrt(2.0), 0.9, 1.0})
        for (double r : {0.0, kPi / 16, kPi / 8, 3 * kPi / 16, kPi / 4}) {
            const RindlerParams p(r, alpha);
            const auto numeric = eigenvalues_hermitian(reduced_alice_region_i(p)).eigenvalues;
            const auto closed = closed_form_spectrum(p);
            for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(numeric[i] - closed[i]) < 1e-12);
        }
}

TEST_CASE("eigenvalues_hermitian: errors") {
    ComplexMatrix m(2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(eigenvalues_hermitian(m), std::invalid_argument);
    ComplexMatrix dense(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) dense(i, j) = 1.0 + static_cast<double>(i + j);
    try {
        eigenvalues_hermitian(dense, 0.0);  // zero tolerance is unreachable
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.residual() >= 0.0);
    }
}

TEST_CASE("property: Jacobi agrees with an independent solver on random Hermitian matrices") {
    std::mt19937_64 rng(15);
    for (std::size_t n : {1, 2, 3, 4, 7, 8, 16, 32, 48}) {
        for (int trial = 0; trial < 4; ++trial) {
            const auto m = random_hermitian(rng, n);
            const auto sys = eigensystem_hermitian(m);
            const auto ref = eigen_reference(m);
            const auto& ev = sys.spectrum.eigenvalues;
            CHECK(sys.spectrum.max_residual < 1e-10);
            CHECK(std::is_sorted(ev.begin(), ev.end(), std::greater<>()));
            double sum = 0.0;
            double sq = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(std::abs(ev[i] - ref[i]) < 1e-10);
                sum += ev[i];
                sq += ev[i] * ev[i];
            }
            CHECK(std::abs(sum - m.trace().real()) < 1e-10);
            CHECK(std::abs(sq - m.frobenius_norm() * m.frobenius_norm()) < 1e-9);
            // Eigenvectors are orthonormal.
            const auto gram = sys.vectors.adjoint() * sys.vectors;
            CHECK(gram.max_abs_diff(ComplexMatrix::identity(n)) < 1e-12);
        }
    }
}

TEST_CASE("validate_density") {
    const auto id4 = ComplexMatrix::identity(4) * Complex{0.25};
    const auto d = validate_density(DensityMatrix(id4));
    CHECK(d.trace_deviation == 0.0);
    CHECK(d.psd_ok);
    CHECK(std::abs(d.min_eigenvalue - 0.25) < 1e-15);

    const RindlerParams p(0.4, 0.6);
    const auto ok = validate_density(reduced_alice_region_i(p));
    CHECK(ok.psd_ok);
    CHECK(ok.trace_deviation < 1e-12);
    CHECK(ok.hermiticity_deviation < 1e-12);

    const auto pt = validate_density(partial_transpose(reduced_alice_region_i({0.0, 1.0}), 0));
    CHECK_FALSE(pt.psd_ok);
    CHECK(std::abs(pt.min_eigenvalue + 0.5) < 1e-12);

    ComplexMatrix skew(2);
    skew(0, 0) = 1.0;
    skew(0, 1) = 0.3;
    const auto bad = validate_density(DensityMatrix(skew));
    CHECK(bad.hermiticity_deviation == doctest::Approx(0.3));
}

TEST_CASE("matrix dump format") {
    ComplexMatrix m(2);
    m(0, 0) = 0.5;
    m(0, 1) = Complex{0.1, -2.5e-20};
    m(1, 0) = Complex{-1.0 / 3.0, 1e300};
    std::ostringstream os;
    write_matrix(os, m);
    CHECK(os.str() ==
          "0.5+0i 0.10000000000000001-2.4999999999999999e-20i\n"
          "-0.33333333333333331+1.0000000000000001e+300i 0+0i\n");
    std::istringstream is(os.str());
    CHECK(read_matrix(is) == m);

    std::istringstream ragged("1+0i 0+0i\n1+0i\n");
    CHECK_THROWS_AS(read_matrix(ragged), std::invalid_argument);
    std::istringstream junk("1+0 2\n");
    CHECK_THROWS_AS(read_matrix(junk), std::invalid_argument);
}

TEST_CASE("golden: rho_{A,I} at alpha = 1, r = 0") {
    std::ifstream in(RQI_GOLDEN_DIR "/rho_ai_alpha1_r0.txt");
    REQUIRE(in.good());
    const auto golden = read_matrix(in);
    const auto rho = reduced_alice_region_i(RindlerParams(0.0, 1.0)).matrix();
    CHECK(rho.max_abs_diff(golden) < 1e-15);

    // A dump of the computed matrix parses back bit-exactly.
    std::stringstream text;
    write_matrix(text, rho);
    CHECK(read_matrix(text) == rho);
}
