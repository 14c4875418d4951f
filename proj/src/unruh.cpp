// Copyright 2026 The rindler-qi Authors
// SPDX-License-Identifier: Apache-2.0

#include "rqi/unruh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rqi {

namespace {

void check_r(double r) {
    if (!(r >= 0.0 && r <= kMaxR)) {
        throw std::invalid_argument("r must lie in [0, pi/4], got " + std::to_string(r));
    }
}

}  // namespace

RindlerParams::RindlerParams(double r, double alpha, double phi)
    : r_(r), alpha_(alpha), beta_(0.0), phi_(phi) {
    check_r(r);
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("alpha must lie in [0, 1], got " + std::to_string(alpha));
    }
    if (!(phi >= 0.0 && phi < 2.0 * kPi)) {
        throw std::invalid_argument("phi must lie in [0, 2pi), got " + std::to_string(phi));
    }
    beta_ = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
}

PhysicalConstants PhysicalConstants::si() {
    // CODATA 2018 exact values.
    return {1.054571817e-34, 299792458.0, 1.380649e-23, UnitSystem::SI};
}

PhysicalConstants PhysicalConstants::of(UnitSystem mode) {
    return mode == UnitSystem::SI ? si() : natural();
}

double r_from_acceleration(const AccelerationSpec& spec, const PhysicalConstants& k) {
    if (!(spec.a > 0.0)) throw std::invalid_argument("acceleration must be positive");
    if (!(spec.omega > 0.0)) throw std::invalid_argument("omega must be positive");
    return std::atan(std::exp(-kPi * k.c * spec.omega / spec.a));
}

double unruh_temperature(double a, const PhysicalConstants& k) {
    if (!(a > 0.0)) throw std::invalid_argument("acceleration must be positive");
    return k.hbar * a / (2.0 * kPi * k.k_b * k.c);
}

double fd_occupation(double r) {
    check_r(r);
    const double s = std::sin(r);
    return s * s;
}

double fermi_dirac(double omega, double temperature, const PhysicalConstants& k) {
    if (!(temperature > 0.0)) throw std::invalid_argument("temperature must be positive");
    return 1.0 / (std::exp(k.hbar * omega / (k.k_b * temperature)) + 1.0);
}

LinearOperator minkowski_creation_operator(const RindlerParams& p, ModeScope scope) {
    const Complex c = std::cos(p.r());
    const Complex s = -std::polar(std::sin(p.r()), p.phi());
    LinearOperator op;
    if (scope == ModeScope::SingleMode) {
        op.add_term(c, {create(Region::RegionI, Momentum::PlusK)});
        op.add_term(s, {annihilate(Region::RegionII, Momentum::MinusK)});
        return op;
    }
    for (auto q : {Momentum::PlusK, Momentum::MinusK}) {
        op.add_term(c, {create(Region::RegionI, q)});
        op.add_term(s, {annihilate(Region::RegionII, q)});
    }
    return op;
}

LinearOperator minkowski_annihilation_operator(const RindlerParams& p, ModeScope scope) {
    return minkowski_creation_operator(p, scope).adjoint();
}

StateVector vacuum_state(const RindlerParams& p) {
    const double c = std::cos(p.r());
    const Complex s = std::polar(std::sin(p.r()), -p.phi());
    const auto plus = Momentum::PlusK;
    const auto minus = Momentum::MinusK;

    StateVector v(Layout::Rob);
    v.add(rob_ket(plus, 0, minus, 0), p.alpha() * c);
    v.add(rob_ket(plus, 1, minus, 1), p.alpha() * s);
    v.add(rob_ket(minus, 0, plus, 0), p.beta() * c);
    v.add(rob_ket(minus, 1, plus, 1), p.beta() * s);
    return v;
}

StateVector one_particle_state(const RindlerParams& p) {
    return apply_operator(minkowski_creation_operator(p), vacuum_state(p));
}

StateVector one_particle_state_closed_form(const RindlerParams& p) {
    StateVector v(Layout::Rob);
    v.add(rob_ket(Momentum::PlusK, 1, Momentum::MinusK, 0), p.alpha());
    v.add(rob_ket(Momentum::MinusK, 1, Momentum::PlusK, 0), p.beta());
    return v;
}

StateVector bell_state(const RindlerParams& p) {
    const Complex h = 1.0 / std::sqrt(2.0);
    return with_alice_occupation(0, vacuum_state(p)) * h +
           with_alice_occupation(1, one_particle_state(p)) * h;
}

double occupation_expectation(const StateVector& s, Region region,
                              std::initializer_list<Momentum> momenta) {
    if (std::abs(s.norm() - 1.0) > 1e-10) {
        throw std::invalid_argument("occupation_expectation needs a normalized state");
    }
    LinearOperator number;
    for (auto q : momenta) number.add_term(1.0, {create(region, q), annihilate(region, q)});
    return inner(s, apply_operator(number, s)).real();
}

StateVector swap_momenta(const StateVector& s) {
    auto flip = [](SectorLabel& label) {
        label.tag.momentum =
            label.tag.momentum == Momentum::PlusK ? Momentum::MinusK : Momentum::PlusK;
    };
    StateVector out(s.layout());
    for (const auto& [ket, amp] : s) {
        BasisKet k = ket;
        flip(*k.region_i);
        flip(*k.region_ii);
        out.add(k, amp);
    }
    return out;
}

}  // namespace rqi
