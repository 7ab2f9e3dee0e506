#include "ringlab/structure.hpp"

#include <algorithm>
#include <deque>

#include <fmt/format.h>

#include "ringlab/construct.hpp"

namespace ringlab {

ElementSet::ElementSet(std::size_t universe, std::vector<Element> members)
    : members_(std::move(members)), mask_(universe, false) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (auto m : members_) {
        if (m.index >= universe) throw PreconditionError("set member outside the ring");
        mask_[m.index] = true;
    }
}

std::optional<std::string> ideal_violation(const FiniteRing& ring,
                                           const std::vector<Element>& members) {
    ElementSet set(ring.order(), members);
    if (!set.contains(ring.zero())) return std::string("does not contain zero");
    for (auto x : set) {
        if (!set.contains(ring.neg(x)))
            return fmt::format("not closed under negation at {}", x.index);
        for (auto y : set)
            if (!set.contains(ring.add(x, y)))
                return fmt::format("not closed under addition at ({}, {})", x.index, y.index);
        for (Index r = 0; r < ring.order(); ++r) {
            if (!set.contains(ring.mul(Element{r}, x)))
                return fmt::format("does not absorb {} * {} on the left", r, x.index);
            if (!set.contains(ring.mul(x, Element{r})))
                return fmt::format("does not absorb {} * {} on the right", x.index, r);
        }
    }
    return std::nullopt;
}

Ideal Ideal::from_members(const FiniteRing& ring, std::vector<Element> members) {
    if (auto why = ideal_violation(ring, members))
        throw PreconditionError("not a two-sided ideal of " + ring.spec() + ": " + *why);
    ElementSet set(ring.order(), std::move(members));
    auto gens = set.members();
    return Ideal{ring, std::move(set), std::move(gens)};
}

Element UnitTable::inverse_of(Element u) const {
    if (!members.contains(u)) throw PreconditionError(fmt::format("{} is not a unit", u.index));
    return inverse[u.index];
}

ElementSet idempotents(const FiniteRing& ring) {
    std::vector<Element> out;
    for (Index i = 0; i < ring.order(); ++i)
        if (ring.is_idempotent(Element{i})) out.push_back(Element{i});
    return ElementSet(ring.order(), std::move(out));
}

NilpotentTable nilpotents(const FiniteRing& ring) {
    NilpotentTable table;
    table.index.assign(ring.order(), 0);
    std::vector<Element> members;
    for (Index i = 0; i < ring.order(); ++i) {
        if (auto k = ring.nil_index(Element{i})) {
            table.index[i] = *k;
            members.push_back(Element{i});
        }
    }
    table.members = ElementSet(ring.order(), std::move(members));
    return table;
}

UnitTable units(const FiniteRing& ring) {
    const Element one = ring.one();
    UnitTable table;
    table.inverse.assign(ring.order(), ring.zero());
    std::vector<Element> members;
    for (Index i = 0; i < ring.order(); ++i) {
        const Element a{i};
        // A unit has a purely periodic power sequence whose cycle passes through 1.
        const auto t = ring.power_trajectory(a);
        if (t.preperiod != 1 || ring.power(a, t.period) != one) continue;
        const Element inv = t.period == 1 ? one : ring.power(a, t.period - 1);
        if (ring.mul(a, inv) != one || ring.mul(inv, a) != one)
            throw RingError(fmt::format("inverse of {} failed the two-sided check", i));
        table.inverse[i] = inv;
        members.push_back(a);
    }
    table.members = ElementSet(ring.order(), std::move(members));
    return table;
}

ElementSet center(const FiniteRing& ring) {
    std::vector<Element> out;
    for (Index i = 0; i < ring.order(); ++i) {
        const Element a{i};
        bool central = true;
        for (Index j = 0; j < ring.order() && central; ++j)
            central = ring.mul(a, Element{j}) == ring.mul(Element{j}, a);
        if (central) out.push_back(a);
    }
    return ElementSet(ring.order(), std::move(out));
}

namespace {

std::vector<Element> quasi_regular_set(const FiniteRing& ring, const UnitTable& units) {
    const Element one = ring.one();
    std::vector<Element> out;
    for (Index i = 0; i < ring.order(); ++i) {
        bool in_radical = true;
        for (Index r = 0; r < ring.order() && in_radical; ++r)
            in_radical = units.members.contains(ring.sub(one, ring.mul(Element{r}, Element{i})));
        if (in_radical) out.push_back(Element{i});
    }
    return out;
}

}  // namespace

Ideal jacobson_radical(const FiniteRing& ring) {
    auto members = quasi_regular_set(ring, units(ring));
    if (auto why = ideal_violation(ring, members))
        throw RingError("computed radical of " + ring.spec() + " is not an ideal: " + *why);
    auto radical = Ideal::from_members(ring, std::move(members));
    if (radical.size() > 1) {
        auto top = construct::quotient(ring, radical);
        auto residual = quasi_regular_set(top.ring, units(top.ring));
        if (residual.size() != 1)
            throw RingError("R/J(R) has nonzero radical for " + ring.spec());
    }
    return radical;
}

Ideal ideal_generated(const FiniteRing& ring, std::span<const Element> gens) {
    std::vector<bool> seen(ring.order(), false);
    std::vector<Element> members;
    std::deque<Element> work;
    auto insert = [&](Element x) {
        if (seen[x.index]) return;
        seen[x.index] = true;
        members.push_back(x);
        work.push_back(x);
    };
    insert(ring.zero());
    for (auto g : gens) insert(ring.element(g.index));
    while (!work.empty()) {
        const Element y = work.front();
        work.pop_front();
        insert(ring.neg(y));
        for (Index r = 0; r < ring.order(); ++r) {
            insert(ring.mul(Element{r}, y));
            insert(ring.mul(y, Element{r}));
        }
        // members grows inside the loop; index-based iteration stays valid.
        for (std::size_t i = 0; i < members.size(); ++i) insert(ring.add(y, members[i]));
    }
    ElementSet set(ring.order(), std::move(members));
    return Ideal{ring, std::move(set), std::vector<Element>(gens.begin(), gens.end())};
}

bool is_nil_ideal(const FiniteRing& ring, const Ideal& ideal) {
    return std::all_of(ideal.members.begin(), ideal.members.end(),
                       [&](Element x) { return ring.is_nilpotent(x); });
}

std::uint32_t bounded_index(const FiniteRing& ring) {
    auto nil = nilpotents(ring);
    std::uint32_t best = 1;
    for (auto x : nil.members) best = std::max(best, nil.index_of(x));
    return best;
}

bool is_abelian(const FiniteRing& ring) {
    for (auto e : idempotents(ring))
        for (Index r = 0; r < ring.order(); ++r)
            if (ring.mul(e, Element{r}) != ring.mul(Element{r}, e)) return false;
    return true;
}

StructureTables structure_tables(const FiniteRing& ring) {
    StructureTables t;
    t.idempotents = idempotents(ring);
    t.nilpotents = nilpotents(ring);
    t.center = center(ring);
    if (ring.unital()) {
        t.units = units(ring);
        t.radical = jacobson_radical(ring);
    }
    for (auto x : t.nilpotents.members)
        t.bounded_index = std::max(t.bounded_index, t.nilpotents.index_of(x));
    return t;
}

const ElementSet& RingContext::idempotents() const {
    std::call_once(id_once_, [&] { idempotents_ = ringlab::idempotents(ring_); });
    return *idempotents_;
}

const NilpotentTable& RingContext::nilpotents() const {
    std::call_once(nil_once_, [&] { nilpotents_ = ringlab::nilpotents(ring_); });
    return *nilpotents_;
}

const UnitTable& RingContext::units() const {
    std::call_once(unit_once_, [&] { units_ = ringlab::units(ring_); });
    return *units_;
}

const ElementSet& RingContext::center() const {
    std::call_once(center_once_, [&] { center_ = ringlab::center(ring_); });
    return *center_;
}

const Ideal& RingContext::radical() const {
    std::call_once(radical_once_, [&] { radical_ = jacobson_radical(ring_); });
    return *radical_;
}

bool RingContext::abelian() const {
    std::call_once(abelian_once_, [&] {
        abelian_ = true;
        for (auto e : idempotents()) {
            for (Index r = 0; r < ring_.order() && abelian_; ++r)
                abelian_ = ring_.mul(e, Element{r}) == ring_.mul(Element{r}, e);
            if (!abelian_) break;
        }
    });
    return abelian_;
}

}  // namespace ringlab
