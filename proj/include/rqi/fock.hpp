// Copyright 2026 The rindler-qi Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock.hpp
 * @brief Sector-tagged fermionic Fock space for one Alice mode and Rob's
 *        two Rindler regions.
 *
 * Each Rindler region is a four-dimensional space spanned by
 * |0_k>, |0_{-k}>, |1_k>, |1_{-k}>. Vacuum kets carry a momentum label, so
 * |0_k> and |0_{-k}> are orthogonal. A ladder operator acts only on a sector
 * whose momentum label matches its own and annihilates every other sector.
 *
 * Alice is a plain qubit. The fermionic parity string runs over
 * RegionI < RegionII only.
 */

#pragma once

#include <array>
#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rqi {

using Complex = std::complex<double>;

enum class Region : std::uint8_t { AliceMinkowski, RegionI, RegionII };
enum class Momentum : std::uint8_t { PlusK, MinusK, KA };
enum class Species : std::uint8_t { Particle, Antiparticle };

struct ModeTag {
    Region region;
    Momentum momentum;
    Species species;

    constexpr auto operator<=>(const ModeTag&) const = default;
};

/// Throws std::invalid_argument unless the region/momentum/species triple is
/// one of the combinations the model admits.
void validate_tag(const ModeTag& tag);

/// Builds the unique valid tag for a region and momentum (species is implied).
ModeTag make_tag(Region region, Momentum momentum);

inline ModeTag alice_tag() { return make_tag(Region::AliceMinkowski, Momentum::KA); }

struct SectorLabel {
    ModeTag tag;
    int occupation = 0;

    constexpr auto operator<=>(const SectorLabel&) const = default;
};

/// Subsystems present in a ket or matrix, always in Alice < RegionI < RegionII order.
enum class Layout : std::uint8_t {
    Full,     ///< Alice x RegionI x RegionII (2 x 4 x 4)
    Rob,      ///< RegionI x RegionII (4 x 4)
};

/// Dimension of one Rindler sector space.
inline constexpr std::size_t kRegionDim = 4;
inline constexpr std::size_t kAliceDim = 2;

/**
 * Product-basis label. Absent fields mark subsystems that are not part of the
 * layout (e.g. Alice in a Rob-only state, or traced-out factors).
 *
 * Ordering follows the canonical basis index: Alice slowest, then region I as
 * (0_k, 0_{-k}, 1_k, 1_{-k}), then region II with the same pattern.
 */
struct BasisKet {
    std::optional<SectorLabel> alice;
    std::optional<SectorLabel> region_i;
    std::optional<SectorLabel> region_ii;

    bool operator==(const BasisKet&) const = default;
    std::strong_ordering operator<=>(const BasisKet& other) const;
};

/// Index of a sector inside its subsystem: 2 * occupation + (momentum == -k).
/// Alice sectors index by occupation.
std::size_t sector_index(const SectorLabel& label);
SectorLabel sector_from_index(Region region, std::size_t index);

Layout layout_of(const BasisKet& ket);

/// Canonical row index of a ket within its layout.
std::size_t ket_index(const BasisKet& ket);
BasisKet ket_from_index(Layout layout, std::size_t index);
std::size_t layout_dimension(Layout layout);

/// All kets of a layout in canonical order (32 for Full, 16 for Rob).
std::vector<BasisKet> all_basis_kets(Layout layout);

/// Convenience constructors for Rindler and Alice kets.
BasisKet rob_ket(Momentum mom_i, int occ_i, Momentum mom_ii, int occ_ii);
BasisKet full_ket(int occ_alice, Momentum mom_i, int occ_i, Momentum mom_ii, int occ_ii);

/// Ket rendered as e.g. "|0_A,1_k,0_-k>".
std::string to_string(const BasisKet& ket);

/**
 * Sparse superposition of basis kets. Amplitudes whose magnitude falls below
 * kPruneThreshold are dropped on every update, so the empty collection is the
 * zero state.
 */
class StateVector {
  public:
    using Container = std::map<BasisKet, Complex>;

    static constexpr double kPruneThreshold = 1e-15;

    explicit StateVector(Layout layout = Layout::Full) : layout_(layout) {}

    /// Adds `amplitude` to the coefficient of `ket`. Throws on layout mismatch
    /// or non-finite amplitude.
    StateVector& add(const BasisKet& ket, Complex amplitude);

    Complex amplitude(const BasisKet& ket) const;
    Layout layout() const { return layout_; }
    const Container& amplitudes() const { return amps_; }
    std::size_t size() const { return amps_.size(); }
    bool is_zero() const { return amps_.empty(); }
    double norm() const;

    auto begin() const { return amps_.begin(); }
    auto end() const { return amps_.end(); }

    StateVector operator*(Complex scale) const;
    StateVector operator+(const StateVector& other) const;
    StateVector operator-(const StateVector& other) const;

  private:
    Layout layout_;
    Container amps_;
};

inline StateVector operator*(Complex scale, const StateVector& s) { return s * scale; }

enum class LadderAction : std::uint8_t { Create, Annihilate };

struct Ladder {
    LadderAction action;
    ModeTag target;

    bool operator==(const Ladder&) const = default;
};

inline Ladder create(Region region, Momentum momentum) {
    return {LadderAction::Create, make_tag(region, momentum)};
}
inline Ladder annihilate(Region region, Momentum momentum) {
    return {LadderAction::Annihilate, make_tag(region, momentum)};
}

/// Complex-weighted sum of ladder products. Factors are written left to right
/// and applied right to left; an empty product is the identity.
class LinearOperator {
  public:
    struct Term {
        Complex coefficient;
        std::vector<Ladder> factors;
    };

    LinearOperator() = default;
    explicit LinearOperator(std::vector<Term> terms);

    static LinearOperator identity();

    LinearOperator& add_term(Complex coefficient, std::vector<Ladder> factors);
    const std::vector<Term>& terms() const { return terms_; }

    /// Hermitian adjoint: conjugated coefficients, reversed products,
    /// Create <-> Annihilate.
    LinearOperator adjoint() const;

    /// Operator product (this * other).
    LinearOperator operator*(const LinearOperator& other) const;
    LinearOperator operator+(const LinearOperator& other) const;
    LinearOperator operator*(Complex scale) const;

  private:
    std::vector<Term> terms_;
};

StateVector apply_ladder(const Ladder& op, const StateVector& s);
StateVector apply_operator(const LinearOperator& op, const StateVector& s);

/// Conjugate-linear in the first argument. Throws on layout mismatch.
Complex inner(const StateVector& lhs, const StateVector& rhs);

/// Throws DegenerateStateError when norm(s) <= 1e-12.
StateVector normalize(const StateVector& s);

/// Embeds a Rob state as alice[0]|0_A> x s + alice[1]|1_A> x s. No fermionic
/// sign is attached to Alice.
StateVector tensor_with_alice(std::array<Complex, 2> alice, const StateVector& rob_state);

/// Prepends a definite Alice occupation to every ket of a Rob state.
StateVector with_alice_occupation(int occupation, const StateVector& rob_state);

}  // namespace rqi
