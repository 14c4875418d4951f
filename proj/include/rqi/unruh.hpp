// Copyright 2026 The rindler-qi Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file unruh.hpp
 * @brief Acceleration parameterization, the entangled Minkowski vacuum seen by
 *        a uniformly accelerated observer, Minkowski ladder operators, the
 *        Alice-Rob Bell state, and Unruh thermal occupation.
 *
 * The vacuum of the Minkowski mode k is
 *
 *   alpha [cos r |0_k>_I |0_{-k}>_II + e^{-i phi} sin r |1_k>_I |1_{-k}>_II]
 * + beta  [cos r |0_{-k}>_I |0_k>_II + e^{-i phi} sin r |1_{-k}>_I |1_k>_II]
 *
 * with alpha^2 + beta^2 = 1 and tan r = exp(-pi c omega / a).
 */

#pragma once

#include <initializer_list>
#include <numbers>

#include "rqi/fock.hpp"

namespace rqi {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kMaxR = kPi / 4.0;

/// (r, alpha, phi) with beta = +sqrt(1 - alpha^2). Validated on construction.
class RindlerParams {
  public:
    RindlerParams(double r, double alpha, double phi = 0.0);

    double r() const { return r_; }
    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double phi() const { return phi_; }

  private:
    double r_;
    double alpha_;
    double beta_;
    double phi_;
};

enum class UnitSystem { Natural, SI };

struct PhysicalConstants {
    double hbar = 1.0;
    double c = 1.0;
    double k_b = 1.0;
    UnitSystem mode = UnitSystem::Natural;

    static PhysicalConstants natural() { return {}; }
    static PhysicalConstants si();
    static PhysicalConstants of(UnitSystem mode);
};

struct AccelerationSpec {
    double a;      ///< proper acceleration
    double omega;  ///< mode angular frequency
};

/// r = arctan(exp(-pi c omega / a)), in (0, pi/4).
double r_from_acceleration(const AccelerationSpec& spec,
                           const PhysicalConstants& k = PhysicalConstants::natural());

/// T = hbar a / (2 pi k_B c).
double unruh_temperature(double a, const PhysicalConstants& k = PhysicalConstants::natural());

/// sin^2 r. Throws for r outside [0, pi/4].
double fd_occupation(double r);

/// 1 / (exp(hbar omega / k_B T) + 1).
double fermi_dirac(double omega, double temperature,
                   const PhysicalConstants& k = PhysicalConstants::natural());

enum class ModeScope {
    BothMomenta,  ///< sum over q in {+k, -k}
    SingleMode,   ///< cos r c+_{I,+k} - e^{i phi} sin r d_{II,-k}
};

/// sum_q [cos r Create(I, q) - e^{i phi} sin r Annihilate(II, q)].
LinearOperator minkowski_creation_operator(const RindlerParams& p,
                                           ModeScope scope = ModeScope::BothMomenta);
LinearOperator minkowski_annihilation_operator(const RindlerParams& p,
                                               ModeScope scope = ModeScope::BothMomenta);

/// Minkowski vacuum over RegionI x RegionII.
StateVector vacuum_state(const RindlerParams& p);

/// Creation operator applied to vacuum_state(p).
StateVector one_particle_state(const RindlerParams& p);

/// alpha |1_k>_I |0_{-k}>_II + beta |1_{-k}>_I |0_k>_II, written out directly.
StateVector one_particle_state_closed_form(const RindlerParams& p);

/// (|0_A> x vacuum + |1_A> x one-particle) / sqrt(2) over Alice x I x II.
StateVector bell_state(const RindlerParams& p);

/// <s| sum_{q in momenta} n_{q,region} |s>. `s` must be normalized.
double occupation_expectation(const StateVector& s, Region region,
                              std::initializer_list<Momentum> momenta);

/// Relabels +k <-> -k in both Rindler regions.
StateVector swap_momenta(const StateVector& s);

}  // namespace rqi
