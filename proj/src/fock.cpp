// Copyright 2026 The rindler-qi Authors
// SPDX-License-Identifier: Apache-2.0

#include "rqi/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rqi/errors.hpp"

namespace rqi {

void validate_tag(const ModeTag& tag) {
    switch (tag.region) {
        case Region::AliceMinkowski:
            if (tag.momentum != Momentum::KA || tag.species != Species::Particle) {
                throw std::invalid_argument("Alice mode must be (k_A, particle)");
            }
            return;
        case Region::RegionI:
            if (tag.momentum == Momentum::KA || tag.species != Species::Particle) {
                throw std::invalid_argument("region I mode must be (+-k, particle)");
            }
            return;
        case Region::RegionII:
            if (tag.momentum == Momentum::KA || tag.species != Species::Antiparticle) {
                throw std::invalid_argument("region II mode must be (+-k, antiparticle)");
            }
            return;
    }
    throw std::invalid_argument("unknown region");
}

ModeTag make_tag(Region region, Momentum momentum) {
    ModeTag tag{region, momentum,
                region == Region::RegionII ? Species::Antiparticle : Species::Particle};
    validate_tag(tag);
    return tag;
}

namespace {

void validate_label(const SectorLabel& label, Region expected) {
    validate_tag(label.tag);
    if (label.tag.region != expected) {
        throw std::invalid_argument("sector label placed in the wrong subsystem");
    }
    if (label.occupation != 0 && label.occupation != 1) {
        throw std::invalid_argument("fermionic occupation must be 0 or 1");
    }
}

void validate_ket(const BasisKet& ket) {
    if (ket.alice) validate_label(*ket.alice, Region::AliceMinkowski);
    if (!ket.region_i || !ket.region_ii) {
        throw std::invalid_argument("state kets must carry both Rindler regions");
    }
    validate_label(*ket.region_i, Region::RegionI);
    validate_label(*ket.region_ii, Region::RegionII);
}

}  // namespace

std::size_t sector_index(const SectorLabel& label) {
    if (label.tag.region == Region::AliceMinkowski) {
        return static_cast<std::size_t>(label.occupation);
    }
    return 2 * static_cast<std::size_t>(label.occupation) +
           (label.tag.momentum == Momentum::MinusK ? 1 : 0);
}

SectorLabel sector_from_index(Region region, std::size_t index) {
    if (region == Region::AliceMinkowski) {
        if (index >= kAliceDim) throw std::invalid_argument("Alice index out of range");
        return {alice_tag(), static_cast<int>(index)};
    }
    if (index >= kRegionDim) throw std::invalid_argument("sector index out of range");
    return {make_tag(region, index % 2 == 0 ? Momentum::PlusK : Momentum::MinusK),
            static_cast<int>(index / 2)};
}

Layout layout_of(const BasisKet& ket) { return ket.alice ? Layout::Full : Layout::Rob; }

std::size_t layout_dimension(Layout layout) {
    return layout == Layout::Full ? kAliceDim * kRegionDim * kRegionDim
                                  : kRegionDim * kRegionDim;
}

std::size_t ket_index(const BasisKet& ket) {
    std::size_t index = 0;
    if (ket.alice) index = sector_index(*ket.alice);
    if (ket.region_i) index = index * kRegionDim + sector_index(*ket.region_i);
    if (ket.region_ii) index = index * kRegionDim + sector_index(*ket.region_ii);
    return index;
}

BasisKet ket_from_index(Layout layout, std::size_t index) {
    if (index >= layout_dimension(layout)) throw std::invalid_argument("ket index out of range");
    BasisKet ket;
    ket.region_ii = sector_from_index(Region::RegionII, index % kRegionDim);
    index /= kRegionDim;
    ket.region_i = sector_from_index(Region::RegionI, index % kRegionDim);
    index /= kRegionDim;
    if (layout == Layout::Full) ket.alice = sector_from_index(Region::AliceMinkowski, index);
    return ket;
}

std::strong_ordering BasisKet::operator<=>(const BasisKet& other) const {
    // Absent fields sort first; within a layout this is the canonical index.
    auto key = [](const BasisKet& k) {
        return std::array<int, 3>{k.alice ? static_cast<int>(sector_index(*k.alice)) : -1,
                                  k.region_i ? static_cast<int>(sector_index(*k.region_i)) : -1,
                                  k.region_ii ? static_cast<int>(sector_index(*k.region_ii)) : -1};
    };
    return key(*this) <=> key(other);
}

std::vector<BasisKet> all_basis_kets(Layout layout) {
    std::vector<BasisKet> kets;
    const auto dim = layout_dimension(layout);
    kets.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) kets.push_back(ket_from_index(layout, i));
    return kets;
}

BasisKet rob_ket(Momentum mom_i, int occ_i, Momentum mom_ii, int occ_ii) {
    BasisKet ket{std::nullopt, SectorLabel{make_tag(Region::RegionI, mom_i), occ_i},
                 SectorLabel{make_tag(Region::RegionII, mom_ii), occ_ii}};
    validate_ket(ket);
    return ket;
}

BasisKet full_ket(int occ_alice, Momentum mom_i, int occ_i, Momentum mom_ii, int occ_ii) {
    BasisKet ket = rob_ket(mom_i, occ_i, mom_ii, occ_ii);
    ket.alice = SectorLabel{alice_tag(), occ_alice};
    validate_ket(ket);
    return ket;
}

std::string to_string(const BasisKet& ket) {
    auto label = [](const SectorLabel& s) {
        std::string out = std::to_string(s.occupation);
        switch (s.tag.momentum) {
            case Momentum::KA: return out + "_A";
            case Momentum::PlusK: return out + "_k";
            case Momentum::MinusK: return out + "_-k";
        }
        return out;
    };
    std::string out = "|";
    bool first = true;
    for (const auto* field : {&ket.alice, &ket.region_i, &ket.region_ii}) {
        if (!*field) continue;
        if (!first) out += ",";
        out += label(**field);
        first = false;
    }
    return out + ">";
}

// ---------------------------------------------------------------------------
// StateVector

StateVector& StateVector::add(const BasisKet& ket, Complex amplitude) {
    validate_ket(ket);
    if (layout_of(ket) != layout_) throw std::invalid_argument("ket layout mismatch");
    if (!std::isfinite(amplitude.real()) || !std::isfinite(amplitude.imag())) {
        throw std::invalid_argument("non-finite amplitude");
    }
    auto [it, inserted] = amps_.try_emplace(ket, amplitude);
    if (!inserted) it->second += amplitude;
    if (std::abs(it->second) < kPruneThreshold) amps_.erase(it);
    return *this;
}

Complex StateVector::amplitude(const BasisKet& ket) const {
    auto it = amps_.find(ket);
    return it == amps_.end() ? Complex{} : it->second;
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const auto& [ket, amp] : amps_) sum += std::norm(amp);
    return std::sqrt(sum);
}

StateVector StateVector::operator*(Complex scale) const {
    StateVector out(layout_);
    for (const auto& [ket, amp] : amps_) out.add(ket, amp * scale);
    return out;
}

StateVector StateVector::operator+(const StateVector& other) const {
    if (other.layout_ != layout_) throw std::invalid_argument("layout mismatch");
    StateVector out = *this;
    for (const auto& [ket, amp] : other.amps_) out.add(ket, amp);
    return out;
}

StateVector StateVector::operator-(const StateVector& other) const {
    return *this + other * Complex{-1.0};
}

// ---------------------------------------------------------------------------
// Operators

LinearOperator::LinearOperator(std::vector<Term> terms) {
    for (auto& t : terms) add_term(t.coefficient, std::move(t.factors));
}

LinearOperator LinearOperator::identity() {
    LinearOperator op;
    op.add_term(1.0, {});
    return op;
}

LinearOperator& LinearOperator::add_term(Complex coefficient, std::vector<Ladder> factors) {
    for (const auto& f : factors) {
        validate_tag(f.target);
        if (f.target.region == Region::AliceMinkowski) {
            throw std::invalid_argument("primitive ladders act on Rindler regions only");
        }
    }
    terms_.push_back({coefficient, std::move(factors)});
    return *this;
}

LinearOperator LinearOperator::adjoint() const {
    LinearOperator out;
    for (const auto& term : terms_) {
        std::vector<Ladder> factors(term.factors.rbegin(), term.factors.rend());
        for (auto& f : factors) {
            f.action = f.action == LadderAction::Create ? LadderAction::Annihilate
                                                        : LadderAction::Create;
        }
        out.terms_.push_back({std::conj(term.coefficient), std::move(factors)});
    }
    return out;
}

LinearOperator LinearOperator::operator*(const LinearOperator& other) const {
    LinearOperator out;
    for (const auto& a : terms_) {
        for (const auto& b : other.terms_) {
            std::vector<Ladder> factors = a.factors;
            factors.insert(factors.end(), b.factors.begin(), b.factors.end());
            out.terms_.push_back({a.coefficient * b.coefficient, std::move(factors)});
        }
    }
    return out;
}

LinearOperator LinearOperator::operator+(const LinearOperator& other) const {
    LinearOperator out = *this;
    out.terms_.insert(out.terms_.end(), other.terms_.begin(), other.terms_.end());
    return out;
}

LinearOperator LinearOperator::operator*(Complex scale) const {
    LinearOperator out = *this;
    for (auto& t : out.terms_) t.coefficient *= scale;
    return out;
}

StateVector apply_ladder(const Ladder& op, const StateVector& s) {
    validate_tag(op.target);
    if (op.target.region == Region::AliceMinkowski) {
        throw std::invalid_argument("primitive ladders act on Rindler regions only");
    }
    const bool on_region_i = op.target.region == Region::RegionI;
    StateVector out(s.layout());
    for (const auto& [ket, amp] : s) {
        BasisKet next = ket;
        SectorLabel& sector = on_region_i ? *next.region_i : *next.region_ii;
        if (sector.tag.momentum != op.target.momentum) continue;
        if (op.action == LadderAction::Create) {
            if (sector.occupation == 1) continue;
            sector.occupation = 1;
        } else {
            if (sector.occupation == 0) continue;
            sector.occupation = 0;
        }
        // Jordan-Wigner string over the Rindler sectors preceding the target.
        const int parity = on_region_i ? 0 : ket.region_i->occupation;
        out.add(next, parity % 2 == 0 ? amp : -amp);
    }
    return out;
}

StateVector apply_operator(const LinearOperator& op, const StateVector& s) {
    StateVector out(s.layout());
    for (const auto& term : op.terms()) {
        StateVector partial = s;
        for (auto it = term.factors.rbegin(); it != term.factors.rend() && !partial.is_zero();
             ++it) {
            partial = apply_ladder(*it, partial);
        }
        for (const auto& [ket, amp] : partial) out.add(ket, term.coefficient * amp);
    }
    return out;
}

Complex inner(const StateVector& lhs, const StateVector& rhs) {
    if (lhs.layout() != rhs.layout()) throw std::invalid_argument("inner: layout mismatch");
    Complex sum{};
    for (const auto& [ket, amp] : lhs) sum += std::conj(amp) * rhs.amplitude(ket);
    return sum;
}

StateVector normalize(const StateVector& s) {
    const double n = s.norm();
    if (n <= 1e-12) throw DegenerateStateError("cannot normalize a zero state");
    return s * Complex{1.0 / n};
}

StateVector with_alice_occupation(int occupation, const StateVector& rob_state) {
    if (rob_state.layout() != Layout::Rob) {
        throw std::invalid_argument("expected a RegionI x RegionII state");
    }
    StateVector out(Layout::Full);
    for (const auto& [ket, amp] : rob_state) {
        BasisKet full = ket;
        full.alice = SectorLabel{alice_tag(), occupation};
        out.add(full, amp);
    }
    return out;
}

StateVector tensor_with_alice(std::array<Complex, 2> alice, const StateVector& rob_state) {
    return with_alice_occupation(0, rob_state) * alice[0] +
           with_alice_occupation(1, rob_state) * alice[1];
}

}  // namespace rqi
