#include "ringlab/classify.hpp"

#include <chrono>

#include "ringlab/deciders.hpp"

namespace ringlab {

const char* to_string(Tri value) {
    switch (value) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    case Tri::NotApplicable: return "n/a";
    }
    return "?";
}

const char* property_key(Property p) {
    switch (p) {
    case Property::WeaklyNilClean: return "weakly_nil_clean";
    case Property::Clean: return "clean";
    case Property::NilClean: return "nil_clean";
    case Property::Exchange: return "exchange";
    case Property::PiRegular: return "pi_regular";
    case Property::StronglyPiRegular: return "strongly_pi_regular";
    case Property::StronglyRegular: return "strongly_regular";
    case Property::Abelian: return "abelian";
    case Property::UniqueIdempotent: return "unique_idempotent_all";
    case Property::UniqueNilpotent: return "unique_nilpotent_all";
    }
    return "?";
}

Tri ClassificationReport::get(Property p) const {
    for (const auto& [key, value] : properties)
        if (key == p) return value;
    return Tri::NotApplicable;
}

namespace {

bool needs_unity(Property p) {
    return p != Property::WeaklyNilClean && p != Property::NilClean;
}

// First element failing the predicate, if any.
template <class Pred>
std::optional<Element> first_failure(const FiniteRing& ring, Pred holds) {
    for (Index i = 0; i < ring.order(); ++i)
        if (!holds(Element{i})) return Element{i};
    return std::nullopt;
}

std::optional<Element> evaluate(const RingContext& ctx, Property p) {
    const auto& ring = ctx.ring();
    switch (p) {
    case Property::WeaklyNilClean:
        return first_failure(ring, [&](Element a) { return find_wncl(ctx, a).has_value(); });
    case Property::Clean:
        return first_failure(ring, [&](Element a) { return clean_witness(ctx, a).has_value(); });
    case Property::NilClean:
        return first_failure(ring, [&](Element a) { return nil_clean_witness(ctx, a).has_value(); });
    case Property::Exchange:
        return first_failure(ring, [&](Element a) { return find_exchange(ctx, a).has_value(); });
    case Property::PiRegular:
        return first_failure(ring, [&](Element a) { return find_pi_regular(ctx, a).has_value(); });
    case Property::StronglyPiRegular:
        return first_failure(ring, [&](Element a) { return find_strong_pi(ctx, a).has_value(); });
    case Property::StronglyRegular:
        return first_failure(ring, [&](Element a) { return strongly_regular_witness(ctx, a).has_value(); });
    case Property::Abelian: {
        for (auto e : ctx.idempotents())
            for (Index r = 0; r < ring.order(); ++r)
                if (ring.mul(e, Element{r}) != ring.mul(Element{r}, e)) return e;
        return std::nullopt;
    }
    case Property::UniqueIdempotent:
        return first_failure(ring, [&](Element a) { return unique_idempotent_wncl(ctx, a, 2).distinct == 1; });
    case Property::UniqueNilpotent:
        return first_failure(ring, [&](Element a) { return unique_nilpotent_wncl(ctx, a, 2).distinct == 1; });
    }
    return std::nullopt;
}

}  // namespace

ClassificationReport classify(const RingContext& ctx) {
    using clock = std::chrono::steady_clock;
    const auto& ring = ctx.ring();
    ClassificationReport report;
    report.spec = ring.spec();
    report.order = ring.order();
    report.unital = ring.unital();

    auto timed = [&](const std::string& name, auto&& fn) {
        const auto start = clock::now();
        fn();
        report.timings.emplace_back(name, std::chrono::duration<double>(clock::now() - start).count());
    };

    timed("structure", [&] {
        report.idempotents = ctx.idempotents().size();
        report.nilpotents = ctx.nilpotents().members.size();
        report.center = ctx.center().size();
        for (auto x : ctx.nilpotents().members)
            report.bounded_index = std::max(report.bounded_index, ctx.nilpotents().index_of(x));
        if (ring.unital()) {
            report.units = ctx.units().members.size();
            report.radical = ctx.radical().size();
        }
    });

    for (auto p : all_properties) {
        if (needs_unity(p) && !ring.unital()) {
            report.properties.emplace_back(p, Tri::NotApplicable);
            continue;
        }
        std::optional<Element> failure;
        timed(property_key(p), [&] { failure = evaluate(ctx, p); });
        report.properties.emplace_back(p, tri(!failure));
        if (failure) report.counterexamples.emplace_back(p, *failure);
    }
    return report;
}

}  // namespace ringlab
