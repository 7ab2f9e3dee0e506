#include "ringlab/core.hpp"

#include <fmt/format.h>

namespace ringlab {

const char* to_string(Axiom axiom) {
    switch (axiom) {
    case Axiom::AdditiveIdentity: return "additive identity";
    case Axiom::AdditiveInverse: return "additive inverse";
    case Axiom::AdditiveCommutativity: return "additive commutativity";
    case Axiom::AdditiveAssociativity: return "additive associativity";
    case Axiom::MultiplicativeAssociativity: return "multiplicative associativity";
    case Axiom::LeftDistributivity: return "left distributivity";
    case Axiom::RightDistributivity: return "right distributivity";
    case Axiom::ZeroAbsorption: return "zero absorption";
    case Axiom::Unity: return "unity";
    }
    return "unknown";
}

std::string AxiomFailure::describe() const {
    return fmt::format("{} fails at ({}, {}, {})", to_string(axiom), elements[0].index,
                       elements[1].index, elements[2].index);
}

FiniteRing::FiniteRing(std::size_t order, std::shared_ptr<const RingBackend> backend,
                       Element zero, std::optional<Element> one, std::string spec,
                       std::size_t table_cap) {
    if (order == 0) throw PreconditionError("ring order must be at least 1");
    auto impl = std::make_shared<Impl>();
    impl->order = order;
    impl->backend = std::move(backend);
    impl->zero = zero;
    impl->one = one;
    impl->spec = std::move(spec);
    if (order <= table_cap) {
        const auto n = order;
        impl->add_table.resize(n * n);
        impl->mul_table.resize(n * n);
        impl->neg_table.resize(n);
        for (Index a = 0; a < n; ++a) {
            impl->neg_table[a] = impl->backend->neg(a);
            for (Index b = 0; b < n; ++b) {
                impl->add_table[std::size_t(a) * n + b] = impl->backend->add(a, b);
                impl->mul_table[std::size_t(a) * n + b] = impl->backend->mul(a, b);
            }
        }
    }
    impl_ = std::move(impl);
}

FiniteRing FiniteRing::from_tables(std::size_t order, std::vector<Index> add,
                                   std::vector<Index> mul, Element zero,
                                   std::optional<Element> one, std::string spec) {
    if (order == 0) throw PreconditionError("ring order must be at least 1");
    if (add.size() != order * order || mul.size() != order * order)
        throw PreconditionError("operation tables must have order*order entries");
    for (auto v : add)
        if (v >= order) throw PreconditionError("addition table entry out of range");
    for (auto v : mul)
        if (v >= order) throw PreconditionError("multiplication table entry out of range");
    if (zero.index >= order || (one && one->index >= order))
        throw PreconditionError("distinguished element out of range");

    auto impl = std::make_shared<Impl>();
    impl->order = order;
    impl->zero = zero;
    impl->one = one;
    impl->spec = std::move(spec);
    impl->neg_table.assign(order, zero.index);
    for (Index a = 0; a < order; ++a) {
        for (Index b = 0; b < order; ++b) {
            if (add[std::size_t(a) * order + b] == zero.index) {
                impl->neg_table[a] = b;
                break;
            }
        }
    }
    impl->add_table = std::move(add);
    impl->mul_table = std::move(mul);
    return FiniteRing(std::shared_ptr<const Impl>(std::move(impl)));
}

Element FiniteRing::one() const {
    if (!impl_->one) throw NonUnitalError("ring " + impl_->spec + " has no identity");
    return *impl_->one;
}

Element FiniteRing::element(Index i) const {
    if (i >= impl_->order)
        throw PreconditionError(
            fmt::format("element index {} out of range for ring of order {}", i, impl_->order));
    return Element{i};
}

Element FiniteRing::power(Element a, std::uint64_t k) const {
    if (k == 0) throw PreconditionError("power exponent must be positive");
    Element result = a;
    Element base = a;
    --k;
    while (k > 0) {
        if (k & 1u) result = mul(result, base);
        k >>= 1u;
        if (k > 0) base = mul(base, base);
    }
    return result;
}

PowerTrajectory FiniteRing::power_trajectory(Element a) const {
    // Brent's cycle detection on x -> x*a starting from a^1.
    std::uint32_t limit = 1;
    std::uint32_t period = 1;
    Element tortoise = a;
    Element hare = mul(a, a);
    while (tortoise != hare) {
        if (limit == period) {
            tortoise = hare;
            limit *= 2;
            period = 0;
        }
        hare = mul(hare, a);
        ++period;
    }
    tortoise = a;
    hare = a;
    for (std::uint32_t i = 0; i < period; ++i) hare = mul(hare, a);
    std::uint32_t offset = 0;
    while (tortoise != hare) {
        tortoise = mul(tortoise, a);
        hare = mul(hare, a);
        ++offset;
    }
    return {offset + 1, period};
}

std::optional<std::uint32_t> FiniteRing::nil_index(Element a) const {
    // Fast exit for short nilpotent chains before falling back to the cycle.
    Element x = a;
    for (std::uint32_t k = 1; k <= 8; ++k) {
        if (x == zero()) return k;
        x = mul(x, a);
    }
    auto t = power_trajectory(a);
    if (power(a, t.preperiod) == zero()) return t.preperiod;
    return std::nullopt;
}

bool FiniteRing::tables_equal(const FiniteRing& other) const {
    if (order() != other.order() || zero() != other.zero() || maybe_one() != other.maybe_one())
        return false;
    for (Index a = 0; a < order(); ++a) {
        for (Index b = 0; b < order(); ++b) {
            if (add(Element{a}, Element{b}) != other.add(Element{a}, Element{b})) return false;
            if (mul(Element{a}, Element{b}) != other.mul(Element{a}, Element{b})) return false;
        }
    }
    return true;
}

AxiomVerdict validate_axioms(const FiniteRing& ring) {
    const Index n = static_cast<Index>(ring.order());
    const Element z = ring.zero();
    auto fail = [](Axiom ax, Index a, Index b, Index c) {
        return AxiomFailure{ax, {Element{a}, Element{b}, Element{c}}};
    };

    for (Index a = 0; a < n; ++a) {
        Element x{a};
        if (ring.add(x, z) != x || ring.add(z, x) != x)
            return fail(Axiom::AdditiveIdentity, a, z.index, 0);
        if (ring.add(x, ring.neg(x)) != z) return fail(Axiom::AdditiveInverse, a, 0, 0);
        for (Index b = 0; b < n; ++b)
            if (ring.add(x, Element{b}) != ring.add(Element{b}, x))
                return fail(Axiom::AdditiveCommutativity, a, b, 0);
    }
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
            const Element ab = ring.add(Element{a}, Element{b});
            for (Index c = 0; c < n; ++c)
                if (ring.add(ab, Element{c}) != ring.add(Element{a}, ring.add(Element{b}, Element{c})))
                    return fail(Axiom::AdditiveAssociativity, a, b, c);
        }
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
            const Element ab = ring.mul(Element{a}, Element{b});
            for (Index c = 0; c < n; ++c)
                if (ring.mul(ab, Element{c}) != ring.mul(Element{a}, ring.mul(Element{b}, Element{c})))
                    return fail(Axiom::MultiplicativeAssociativity, a, b, c);
        }
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            for (Index c = 0; c < n; ++c) {
                const Element x{a}, y{b}, w{c};
                if (ring.mul(x, ring.add(y, w)) != ring.add(ring.mul(x, y), ring.mul(x, w)))
                    return fail(Axiom::LeftDistributivity, a, b, c);
                if (ring.mul(ring.add(x, y), w) != ring.add(ring.mul(x, w), ring.mul(y, w)))
                    return fail(Axiom::RightDistributivity, a, b, c);
            }
    for (Index a = 0; a < n; ++a)
        if (ring.mul(z, Element{a}) != z || ring.mul(Element{a}, z) != z)
            return fail(Axiom::ZeroAbsorption, z.index, a, 0);
    if (auto one = ring.maybe_one()) {
        for (Index a = 0; a < n; ++a)
            if (ring.mul(*one, Element{a}) != Element{a} || ring.mul(Element{a}, *one) != Element{a})
                return fail(Axiom::Unity, one->index, a, 0);
    }
    return std::nullopt;
}

}  // namespace ringlab
