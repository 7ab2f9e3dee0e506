#pragma once

// Structural sets and ideals of a finite ring: Id(R), Nil(R), U(R), Z(R),
// J(R), generated ideals and the bounded index of nilpotence.

#include <cstdint>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "ringlab/core.hpp"

namespace ringlab {

/// Sorted set of elements of one ring with O(1) membership.
class ElementSet {
public:
    ElementSet() = default;
    ElementSet(std::size_t universe, std::vector<Element> members);

    bool contains(Element x) const { return x.index < mask_.size() && mask_[x.index]; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    std::size_t universe() const { return mask_.size(); }
    const std::vector<Element>& members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }
    Element front() const { return members_.front(); }

    friend bool operator==(const ElementSet& a, const ElementSet& b) {
        return a.members_ == b.members_;
    }

private:
    std::vector<Element> members_;
    std::vector<bool> mask_;
};

/// Two-sided ideal, validated on construction.
struct Ideal {
    FiniteRing ring;
    ElementSet members;
    std::vector<Element> generators;

    /// Throws PreconditionError unless members form a two-sided ideal.
    static Ideal from_members(const FiniteRing& ring, std::vector<Element> members);

    bool contains(Element x) const { return members.contains(x); }
    std::size_t size() const { return members.size(); }
};

/// Verdict form of the ideal test: empty when members form a two-sided
/// ideal, otherwise a description of the first violation.
std::optional<std::string> ideal_violation(const FiniteRing& ring,
                                           const std::vector<Element>& members);

struct NilpotentTable {
    ElementSet members;
    std::vector<std::uint32_t> index;  // smallest k with a^k = 0; 0 if not nilpotent

    std::uint32_t index_of(Element a) const { return index.at(a.index); }
};

struct UnitTable {
    ElementSet members;
    std::vector<Element> inverse;  // meaningful for members only

    Element inverse_of(Element u) const;
};

ElementSet idempotents(const FiniteRing& ring);
NilpotentTable nilpotents(const FiniteRing& ring);
/// Throws NonUnitalError for rings without identity.
UnitTable units(const FiniteRing& ring);
ElementSet center(const FiniteRing& ring);
/// {x : 1 - r x is a unit for all r}, validated as an ideal with R/J
/// semiprimitive. Throws NonUnitalError for rings without identity.
Ideal jacobson_radical(const FiniteRing& ring);
Ideal ideal_generated(const FiniteRing& ring, std::span<const Element> gens);
bool is_nil_ideal(const FiniteRing& ring, const Ideal& ideal);
/// Largest nil index over all nilpotents (1 when Nil(R) = {0}).
std::uint32_t bounded_index(const FiniteRing& ring);
bool is_abelian(const FiniteRing& ring);

struct StructureTables {
    ElementSet idempotents;
    NilpotentTable nilpotents;
    std::optional<UnitTable> units;  // unital rings only
    ElementSet center;
    std::optional<Ideal> radical;  // unital rings only
    std::uint32_t bounded_index = 1;
};

StructureTables structure_tables(const FiniteRing& ring);

/// A ring plus lazily computed structure sets, shared by the deciders.
/// Safe to use from several threads.
class RingContext {
public:
    explicit RingContext(FiniteRing ring) : ring_(std::move(ring)) {}
    RingContext(const RingContext&) = delete;
    RingContext& operator=(const RingContext&) = delete;

    const FiniteRing& ring() const { return ring_; }
    const ElementSet& idempotents() const;
    const NilpotentTable& nilpotents() const;
    const UnitTable& units() const;
    const ElementSet& center() const;
    const Ideal& radical() const;
    bool abelian() const;

private:
    FiniteRing ring_;
    mutable std::once_flag id_once_, nil_once_, unit_once_, center_once_, radical_once_, abelian_once_;
    mutable std::optional<ElementSet> idempotents_;
    mutable std::optional<NilpotentTable> nilpotents_;
    mutable std::optional<UnitTable> units_;
    mutable std::optional<ElementSet> center_;
    mutable std::optional<Ideal> radical_;
    mutable bool abelian_ = false;
};

}  // namespace ringlab
