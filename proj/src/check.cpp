// Copyright 2026 The rindler-qi Authors
// SPDX-License-Identifier: Apache-2.0

#include "rqi/check.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "rqi/density.hpp"
#include "rqi/fock.hpp"
#include "rqi/measures.hpp"

namespace rqi::check {

namespace {

struct SuiteFailure {
    std::string message;
};

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string describe(const RindlerParams& p) {
    return "(alpha=" + fmt(p.alpha()) + ", r=" + fmt(p.r()) + ", phi=" + fmt(p.phi()) + ")";
}

void require(bool ok, const std::string& message) {
    if (!ok) throw SuiteFailure{message};
}

void require_near(double actual, double expected, double tol, const std::string& what) {
    if (!(std::abs(actual - expected) <= tol)) {
        throw SuiteFailure{what + ": got " + fmt(actual) + ", expected " + fmt(expected) +
                           " (tol " + fmt(tol) + ")"};
    }
}

double state_distance(const StateVector& a, const StateVector& b) { return (a - b).norm(); }

template <typename Body>
SuiteResult run_suite(std::string name, Body&& body) {
    SuiteResult result{std::move(name), true, {}};
    try {
        body();
    } catch (const SuiteFailure& f) {
        result.passed = false;
        result.detail = f.message;
    } catch (const std::exception& e) {
        result.passed = false;
        result.detail = std::string("exception: ") + e.what();
    }
    return result;
}

std::vector<Ladder> all_ladders() {
    std::vector<Ladder> out;
    for (auto action : {LadderAction::Create, LadderAction::Annihilate})
        for (auto region : {Region::RegionI, Region::RegionII})
            for (auto mom : {Momentum::PlusK, Momentum::MinusK})
                out.push_back({action, make_tag(region, mom)});
    return out;
}

StateVector ket_state(const BasisKet& ket) {
    StateVector s(layout_of(ket));
    s.add(ket, 1.0);
    return s;
}

const SectorLabel& sector_of(const BasisKet& ket, Region region) {
    return region == Region::RegionI ? *ket.region_i : *ket.region_ii;
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = a + (b - a) * i / (n - 1);
    out.back() = b;
    return out;
}

ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = u(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = {u(rng), u(rng)};
            m(j, i) = std::conj(m(i, j));
        }
    }
    return m;
}

ComplexMatrix random_state(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ComplexMatrix g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = {u(rng), u(rng)};
    ComplexMatrix rho = g * g.adjoint();
    return rho * Complex{1.0 / rho.trace().real()};
}

// Fixed seed: the check command must be reproducible run to run.
constexpr std::uint64_t kSeed = 20260415;

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace

std::vector<RindlerParams> default_grid() {
    std::vector<RindlerParams> grid;
    for (double alpha : {0.0, 0.3, kInvSqrt2, 0.9, 1.0})
        for (double r : {0.0, kPi / 16, kPi / 8, 3 * kPi / 16, kPi / 4})
            for (double phi : {0.0, kPi / 3, kPi}) grid.emplace_back(r, alpha, phi);
    return grid;
}

ComplexMatrix numerical_reduced_density(const RindlerParams& p) {
    return reduced_alice_region_i(p).matrix();
}

// ---------------------------------------------------------------------------
// fock

SuiteResult fock_exclusion() {
    return run_suite("fock.exclusion", [] {
        for (const auto& ket : all_basis_kets(Layout::Full))
            for (const auto& op : all_ladders()) {
                const auto twice = apply_ladder(op, apply_ladder(op, ket_state(ket)));
                require(twice.is_zero(), "double ladder not zero on " + to_string(ket));
            }
    });
}

SuiteResult fock_sector_anticommutation() {
    return run_suite("fock.sector_anticommutation", [] {
        for (const auto& ket : all_basis_kets(Layout::Full))
            for (auto region : {Region::RegionI, Region::RegionII})
                for (auto mom : {Momentum::PlusK, Momentum::MinusK}) {
                    LinearOperator anti;
                    anti.add_term(1.0, {annihilate(region, mom), create(region, mom)});
                    anti.add_term(1.0, {create(region, mom), annihilate(region, mom)});
                    const auto in = ket_state(ket);
                    const auto out = apply_operator(anti, in);
                    const bool matching = sector_of(ket, region).tag.momentum == mom;
                    const double dist = matching ? state_distance(out, in) : out.norm();
                    require(dist < 1e-15, "anticommutator wrong on " + to_string(ket));
                }
    });
}

SuiteResult fock_cross_tag_nilpotence() {
    return run_suite("fock.cross_tag_nilpotence", [] {
        for (const auto& ket : all_basis_kets(Layout::Full))
            for (const auto& op : all_ladders()) {
                if (sector_of(ket, op.target.region).tag.momentum == op.target.momentum) continue;
                require(apply_ladder(op, ket_state(ket)).is_zero(),
                        "mismatched tag survived on " + to_string(ket));
            }
    });
}

SuiteResult fock_linearity() {
    return run_suite("fock.linearity", [] {
        const RindlerParams p(kPi / 7, 0.6, 1.1);
        const LinearOperator ops[] = {minkowski_creation_operator(p),
                                      minkowski_annihilation_operator(p)};
        const Complex a{0.3, -1.2};
        const Complex b{-0.7, 0.4};
        const auto kets = all_basis_kets(Layout::Full);
        for (const auto& op : ops)
            for (const auto& u : kets)
                for (const auto& v : kets) {
                    const auto su = ket_state(u);
                    const auto sv = ket_state(v);
                    const auto lhs = apply_operator(op, su * a + sv * b);
                    const auto rhs = apply_operator(op, su) * a + apply_operator(op, sv) * b;
                    require(state_distance(lhs, rhs) < 1e-14,
                            "linearity broken on " + to_string(u) + ", " + to_string(v));
                }
    });
}

SuiteResult fock_adjoint_consistency() {
    return run_suite("fock.adjoint_consistency", [] {
        const auto kets = all_basis_kets(Layout::Full);
        for (auto region : {Region::RegionI, Region::RegionII})
            for (auto mom : {Momentum::PlusK, Momentum::MinusK}) {
                const auto c = create(region, mom);
                const auto d = annihilate(region, mom);
                for (const auto& u : kets)
                    for (const auto& v : kets) {
                        const auto su = ket_state(u);
                        const auto sv = ket_state(v);
                        const Complex lhs = inner(apply_ladder(c, su), sv);
                        const Complex rhs = inner(su, apply_ladder(d, sv));
                        require(std::abs(lhs - rhs) < 1e-15,
                                "adjoint mismatch on " + to_string(u) + ", " + to_string(v));
                    }
            }
    });
}

// ---------------------------------------------------------------------------
// unruh

namespace {

std::vector<RindlerParams> dense_grid() {
    std::vector<RindlerParams> grid;
    for (double alpha : linspace(0.0, 1.0, 11))
        for (double r : linspace(0.0, kMaxR, 11))
            for (double phi : {0.0, 0.7, kPi, 5.5}) grid.emplace_back(r, alpha, phi);
    return grid;
}

}  // namespace

SuiteResult unruh_vacuum_annihilation() {
    return run_suite("unruh.vacuum_annihilation", [] {
        for (const auto& p : dense_grid()) {
            const auto out = apply_operator(minkowski_annihilation_operator(p), vacuum_state(p));
            require(out.norm() < 1e-12, "a_k|0> norm " + fmt(out.norm()) + " at " + describe(p));
        }
    });
}

SuiteResult unruh_thermality() {
    return run_suite("unruh.thermality", [] {
        const auto k = PhysicalConstants::natural();
        for (double a : linspace(0.1, 100.0, 200))
            for (double omega : {0.5, 1.0, 2.0}) {
                const double r = r_from_acceleration({a, omega}, k);
                const double fd = fermi_dirac(omega, unruh_temperature(a, k), k);
                require_near(fd_occupation(r), fd, 1e-12,
                             "occupation vs Fermi-Dirac at a=" + fmt(a) + ", omega=" + fmt(omega));
            }
    });
}

SuiteResult unruh_operator_vs_closed_form() {
    return run_suite("unruh.operator_vs_closed_form", [] {
        for (const auto& p : dense_grid()) {
            const auto numeric = one_particle_state(p);
            const auto closed = one_particle_state_closed_form(p);
            for (const auto& ket : all_basis_kets(Layout::Rob)) {
                require(std::abs(numeric.amplitude(ket) - closed.amplitude(ket)) < 1e-12,
                        "one-particle amplitude mismatch on " + to_string(ket) + " at " +
                            describe(p));
            }
        }
    });
}

SuiteResult unruh_norm_preservation() {
    return run_suite("unruh.norm_preservation", [] {
        for (const auto& p : dense_grid()) {
            require_near(vacuum_state(p).norm(), 1.0, 1e-12, "vacuum norm at " + describe(p));
            require_near(bell_state(p).norm(), 1.0, 1e-12, "Bell norm at " + describe(p));
        }
    });
}

SuiteResult unruh_momentum_symmetry() {
    return run_suite("unruh.momentum_symmetry", [] {
        for (const auto& p : dense_grid()) {
            const RindlerParams swapped(p.r(), p.beta(), p.phi());
            const double dist = state_distance(swap_momenta(vacuum_state(p)), vacuum_state(swapped));
            require(dist < 1e-15, "k <-> -k symmetry broken at " + describe(p));
        }
    });
}

// ---------------------------------------------------------------------------
// density

SuiteResult density_trace_preservation() {
    return run_suite("density.trace_preservation", [] {
        std::mt19937_64 rng(kSeed);
        const std::vector<std::vector<std::size_t>> keeps = {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}};
        for (int trial = 0; trial < 20; ++trial) {
            const DensityMatrix rho({2, 4, 4}, random_state(rng, 32));
            for (const auto& keep : keeps) {
                const double t = partial_trace(rho, keep).matrix().trace().real();
                require_near(t, rho.matrix().trace().real(), 1e-12, "partial trace");
            }
        }
    });
}

SuiteResult density_hermiticity_closure() {
    return run_suite("density.hermiticity_closure", [] {
        for (const auto& p : default_grid()) {
            const auto full = density_from_pure(bell_state(p));
            const auto reduced = partial_trace(full, {0, 1});
            const auto pt = partial_transpose(reduced, 0);
            for (const auto* m : {&full, &reduced, &pt}) {
                require(m->matrix().hermiticity_deviation() < 1e-12,
                        "non-Hermitian output at " + describe(p));
            }
        }
    });
}

SuiteResult density_spectrum_residual() {
    return run_suite("density.spectrum_residual", [] {
        std::mt19937_64 rng(kSeed + 1);
        for (std::size_t n : {2, 4, 8, 16, 32})
            for (int trial = 0; trial < 5; ++trial) {
                const auto spectrum = eigenvalues_hermitian(random_hermitian(rng, n));
                require(spectrum.max_residual < 1e-10,
                        "residual " + fmt(spectrum.max_residual) + " at n=" + std::to_string(n));
            }
    });
}

SuiteResult density_eigen_sums() {
    return run_suite("density.eigen_sums", [] {
        std::mt19937_64 rng(kSeed + 2);
        for (std::size_t n : {2, 4, 8, 16, 32})
            for (int trial = 0; trial < 5; ++trial) {
                const auto m = random_hermitian(rng, n);
                const auto spectrum = eigenvalues_hermitian(m);
                double sum = 0.0;
                double squares = 0.0;
                for (double l : spectrum.eigenvalues) {
                    sum += l;
                    squares += l * l;
                }
                const double fro = m.frobenius_norm();
                require_near(sum, m.trace().real(), 1e-10, "eigenvalue sum vs trace");
                require_near(squares, fro * fro, 1e-9, "eigenvalue squares vs Frobenius");
            }
    });
}

SuiteResult density_pure_purity() {
    return run_suite("density.pure_purity", [] {
        for (const auto& p : default_grid()) {
            require_near(purity(density_from_pure(bell_state(p))), 1.0, 1e-10,
                         "Bell projector purity at " + describe(p));
            require_near(purity(density_from_pure(vacuum_state(p))), 1.0, 1e-10,
                         "vacuum projector purity at " + describe(p));
        }
    });
}

SuiteResult density_complementarity() {
    return run_suite("density.complementarity", [] {
        for (const auto& p : default_grid()) {
            const auto full = density_from_pure(bell_state(p));
            auto ai = eigenvalues_hermitian(partial_trace(full, {0, 1})).eigenvalues;
            auto ii = eigenvalues_hermitian(partial_trace(full, {2})).eigenvalues;
            // Both lists are sorted descending; pad the shorter with zeros.
            ii.resize(ai.size(), 0.0);
            for (std::size_t i = 0; i < ai.size(); ++i)
                require_near(ii[i], ai[i], 1e-10, "rho_II vs rho_AI eigenvalue at " + describe(p));
        }
    });
}

// ---------------------------------------------------------------------------
// measures

SuiteResult measures_spectrum_oracle(const ReducedDensityFn& reduced) {
    return run_suite("measures.spectrum_oracle", [&] {
        for (const auto& p : default_grid()) {
            const auto numeric = eigenvalues_hermitian(reduced(p)).eigenvalues;
            const auto closed = closed_form_spectrum(p);
            require(numeric.size() == closed.size(), "spectrum size mismatch");
            for (std::size_t i = 0; i < closed.size(); ++i)
                require_near(numeric[i], closed[i], 1e-9,
                             "eigenvalue " + std::to_string(i) + " at " + describe(p));
        }
    });
}

SuiteResult measures_negativity_oracle(const ReducedDensityFn& reduced) {
    return run_suite("measures.negativity_oracle", [&] {
        for (const auto& p : default_grid()) {
            const DensityMatrix rho({2, 4}, reduced(p));
            require_near(negativity(rho, 0), closed_form_negativity(p.r()), 1e-9,
                         "negativity at " + describe(p));
        }
    });
}

SuiteResult measures_entropy_decomposition() {
    return run_suite("measures.entropy_decomposition", [] {
        for (const auto& p : default_grid()) {
            const double s = measure_all(p).entropy;
            const double s1 = measure_all(RindlerParams(p.r(), 1.0, p.phi())).entropy;
            require_near(s, s1 + binary_entropy(p.alpha() * p.alpha()), 1e-9,
                         "S(alpha, r) - S(1, r) - h(alpha^2) at " + describe(p));
        }
    });
}

SuiteResult measures_coherence_alpha_invariance() {
    return run_suite("measures.coherence_alpha_invariance", [] {
        for (const auto& p : default_grid()) {
            const double ref = measure_all(RindlerParams(p.r(), 1.0, p.phi())).coherence;
            require_near(measure_all(p).coherence, ref, 1e-9, "coherence at " + describe(p));
        }
    });
}

SuiteResult measures_phi_invariance() {
    return run_suite("measures.phi_invariance", [] {
        for (const auto& p : default_grid()) {
            const auto ref = measure_all(RindlerParams(p.r(), p.alpha(), 0.0));
            const auto m = measure_all(p);
            require_near(m.entropy, ref.entropy, 1e-10, "entropy at " + describe(p));
            require_near(m.negativity, ref.negativity, 1e-10, "negativity at " + describe(p));
            require_near(m.purity, ref.purity, 1e-10, "purity at " + describe(p));
            require_near(m.coherence, ref.coherence, 1e-10, "coherence at " + describe(p));
        }
    });
}

SuiteResult measures_monotonicity() {
    return run_suite("measures.monotonicity", [] {
        std::vector<MeasureReport> curve;
        for (double r : linspace(0.0, kMaxR, 100)) curve.push_back(measure_all({r, 1.0, 0.0}));
        require_near(curve.front().entropy, 0.0, 1e-12, "entropy at r=0");
        for (std::size_t i = 1; i < curve.size(); ++i) {
            const auto& prev = curve[i - 1];
            const auto& cur = curve[i];
            const std::string at = " at r=" + fmt(cur.params.r());
            require(cur.entropy >= prev.entropy - 1e-12, "entropy decreased" + at);
            require(cur.negativity < prev.negativity, "negativity not strictly decreasing" + at);
            require(cur.coherence <= prev.coherence + 1e-12, "coherence increased" + at);
        }
    });
}

SuiteResult measures_purity_floor() {
    return run_suite("measures.purity_floor", [] {
        for (const auto& p : default_grid())
            require(measure_all(p).purity >= 1.0 / 8.0, "purity below 1/8 at " + describe(p));
        require_near(measure_all({0.0, 1.0, 0.0}).purity, 1.0, 1e-12, "purity(alpha=1, r=0)");
    });
}

std::vector<SuiteResult> run_all() {
    return {
        fock_exclusion(),
        fock_sector_anticommutation(),
        fock_cross_tag_nilpotence(),
        fock_linearity(),
        fock_adjoint_consistency(),
        unruh_vacuum_annihilation(),
        unruh_thermality(),
        unruh_operator_vs_closed_form(),
        unruh_norm_preservation(),
        unruh_momentum_symmetry(),
        density_trace_preservation(),
        density_hermiticity_closure(),
        density_spectrum_residual(),
        density_eigen_sums(),
        density_pure_purity(),
        density_complementarity(),
        measures_spectrum_oracle(),
        measures_negativity_oracle(),
        measures_entropy_decomposition(),
        measures_coherence_alpha_invariance(),
        measures_phi_invariance(),
        measures_monotonicity(),
        measures_purity_floor(),
    };
}

}  // namespace rqi::check
