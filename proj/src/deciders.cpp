#include "ringlab/deciders.hpp"

#include <algorithm>

#include "ringlab/constructive.hpp"

namespace ringlab {

namespace {

constexpr Index absent = std::numeric_limits<Index>::max();

// first[v] = smallest x with produce(x) = v, or absent.
template <class Produce>
std::vector<Index> first_preimages(std::size_t order, Produce produce) {
    std::vector<Index> first(order, absent);
    for (Index x = 0; x < order; ++x) {
        const Element v = produce(Element{x});
        if (first[v.index] == absent) first[v.index] = x;
    }
    return first;
}

std::uint32_t search_bound(const FiniteRing& ring, Element a) {
    const auto t = ring.power_trajectory(a);
    return t.preperiod + t.period;
}

}  // namespace

std::optional<WnclWitness> wncl_witness(const RingContext& ctx, Element a) {
    const auto& ring = ctx.ring();
    ring.element(a.index);
    const auto& nil = ctx.nilpotents().members;
    for (auto e : ctx.idempotents()) {
        const auto first = first_preimages(ring.order(), [&](Element x) { return ring.mul(e, x, a); });
        const Element base = ring.sub(a, e);
        for (auto q : nil) {
            const Element target = ring.sub(base, q);
            if (first[target.index] != absent)
                return WnclWitness{e, q, Element{first[target.index]}, WitnessForm::Primal};
        }
    }
    return std::nullopt;
}

std::optional<WnclWitness> wncl_witness_alt(const RingContext& ctx, Element a) {
    const auto& ring = ctx.ring();
    ring.element(a.index);
    const Element one = ring.one();
    const Element co_a = ring.complement(a);
    const auto first = first_preimages(ring.order(), [&](Element x) { return ring.mul(x, a); });
    for (auto e : ctx.idempotents()) {
        if (first[e.index] == absent) continue;
        const Element f = ring.complement(e);
        for (auto q : ctx.nilpotents().members) {
            if (ring.mul(ring.mul(f, ring.add(one, q)), co_a) == f)
                return WnclWitness{e, q, Element{first[e.index]}, WitnessForm::Alternate};
        }
    }
    return std::nullopt;
}

std::optional<PiRegularWitness> pi_regular_witness(const RingContext& ctx, Element a) {
    const auto& ring = ctx.ring();
    ring.element(a.index);
    const auto bound = search_bound(ring, a);
    for (std::uint32_t n = 1; n <= bound; ++n) {
        const Element an = ring.power(a, n);
        for (Index r = 0; r < ring.order(); ++r)
            if (ring.mul(an, Element{r}, an) == an) return PiRegularWitness{n, Element{r}};
    }
    return std::nullopt;
}

FittingPair fitting_idempotent(const FiniteRing& ring, Element a) {
    const auto t = ring.power_trajectory(a);
    const std::uint64_t p = t.period;
    // The cycle a^i (i >= preperiod) is a cyclic group; its identity is the
    // power whose exponent is a multiple of the period.
    const std::uint64_t m = ((t.preperiod + p - 1) / p) * p;
    std::uint64_t j = t.preperiod;
    while ((j + 1) % p != 0) ++j;
    return {ring.power(a, m), ring.power(a, j)};
}

std::optional<StrongPiWitness> strong_pi_witness(const RingContext& ctx, Element a) {
    const auto& ring = ctx.ring();
    ring.element(a.index);
    ring.one();
    const auto bound = search_bound(ring, a);
    for (std::uint32_t n = 1; n <= bound; ++n) {
        const Element an = ring.power(a, n);
        const Element an1 = ring.mul(an, a);
        for (Index r = 0; r < ring.order(); ++r) {
            if (ring.mul(an1, Element{r}) != an) continue;
            const auto fit = fitting_idempotent(ring, a);
            StrongPiWitness w{n, Element{r}, fit.e, fit.corner_inverse};
            if (!check(ring, a, w)) throw RingError("Fitting decomposition failed to verify");
            return w;
        }
    }
    return std::nullopt;
}

std::optional<LeftPowerWitness> left_strong_pi_witness(const RingContext& ctx, Element a) {
    const auto& ring = ctx.ring();
    ring.element(a.index);
    const auto bound = search_bound(ring, a);
    for (std::uint32_t n = 1; n <= bound; ++n) {
        const Element an = ring.power(a, n);
        const Element an1 = ring.mul(an, a);
        for (Index r = 0; r < ring.order(); ++r)
            if (ring.mul(Element{r}, an1) == an) return LeftPowerWitness{n, Element{r}};
    }
    return std::nullopt;
}

bool check(const FiniteRing& ring, Element a, const LeftPowerWitness& w) {
    if (!ring.contains(a) || !ring.contains(w.r) || w.n == 0) return false;
    return ring.power(a, w.n) == ring.mul(w.r, ring.power(a, w.n + 1));
}

std::optional<ExchangeWitness> exchange_witness(const RingContext& ctx, Element a) {
    const auto& ring = ctx.ring();
    ring.element(a.index);
    const Element co_a = ring.complement(a);
    const auto first_r = first_preimages(ring.order(), [&](Element r) { return ring.mul(r, a); });
    const auto first_s = first_preimages(ring.order(), [&](Element s) { return ring.mul(s, co_a); });
    for (auto e : ctx.idempotents()) {
        const Element f = ring.complement(e);
        if (first_r[e.index] != absent && first_s[f.index] != absent)
            return ExchangeWitness{e, Element{first_r[e.index]}, Element{first_s[f.index]}};
    }
    return std::nullopt;
}

std::optional<SumWitness> clean_witness(const RingContext& ctx, Element a) {
    const auto& ring = ctx.ring();
    ring.element(a.index);
    const auto& units = ctx.units().members;
    for (auto e : ctx.idempotents()) {
        const Element u = ring.sub(a, e);
        if (units.contains(u)) return SumWitness{e, u, SumKind::Unit};
    }
    return std::nullopt;
}

std::optional<SumWitness> nil_clean_witness(const RingContext& ctx, Element a) {
    const auto& ring = ctx.ring();
    ring.element(a.index);
    const auto& nil = ctx.nilpotents().members;
    for (auto e : ctx.idempotents()) {
        const Element q = ring.sub(a, e);
        if (nil.contains(q)) return SumWitness{e, q, SumKind::Nilpotent};
    }
    return std::nullopt;
}

std::optional<StronglyRegularWitness> strongly_regular_witness(const RingContext& ctx, Element a) {
    const auto& ring = ctx.ring();
    ring.element(a.index);
    const Element sq = ring.mul(a, a);
    for (Index r = 0; r < ring.order(); ++r)
        if (ring.mul(sq, Element{r}) == a) return StronglyRegularWitness{Element{r}};
    return std::nullopt;
}

namespace {

enum class CountBy { Idempotent, Nilpotent };

UniquenessCount count_distinct(const RingContext& ctx, Element a, std::size_t stop_at, CountBy by) {
    const auto& ring = ctx.ring();
    ring.element(a.index);
    UniquenessCount out;
    std::vector<bool> seen_q(ring.order(), false);
    std::vector<std::optional<WnclWitness>> by_q(by == CountBy::Nilpotent ? ring.order() : 0);
    for (auto e : ctx.idempotents()) {
        const auto first = first_preimages(ring.order(), [&](Element x) { return ring.mul(e, x, a); });
        const Element base = ring.sub(a, e);
        bool e_counted = false;
        for (auto q : ctx.nilpotents().members) {
            const Element target = ring.sub(base, q);
            if (first[target.index] == absent) continue;
            const WnclWitness w{e, q, Element{first[target.index]}, WitnessForm::Primal};
            if (by == CountBy::Idempotent) {
                if (!e_counted) {
                    e_counted = true;
                    ++out.distinct;
                    out.samples.push_back(w);
                    if (out.distinct >= stop_at) return out;
                }
                break;
            }
            if (!seen_q[q.index]) {
                seen_q[q.index] = true;
                by_q[q.index] = w;
                if (++out.distinct >= stop_at) break;
            }
        }
        if (by == CountBy::Nilpotent && out.distinct >= stop_at) break;
    }
    if (by == CountBy::Nilpotent)
        for (const auto& w : by_q)
            if (w) out.samples.push_back(*w);
    return out;
}

}  // namespace

UniquenessCount unique_idempotent_wncl(const RingContext& ctx, Element a, std::size_t stop_at) {
    return count_distinct(ctx, a, stop_at, CountBy::Idempotent);
}

UniquenessCount unique_nilpotent_wncl(const RingContext& ctx, Element a, std::size_t stop_at) {
    return count_distinct(ctx, a, stop_at, CountBy::Nilpotent);
}

PiRegularWitness pi_regular_from_trajectory(const FiniteRing& ring, Element a) {
    const auto t = ring.power_trajectory(a);
    const std::uint32_t n = t.preperiod;
    // a^n r a^n = a^(2n + s) with r = a^s; need 2n + s = n (mod period), s >= 1.
    std::uint64_t s = 1;
    while ((2ull * n + s) % t.period != n % t.period) ++s;
    return {n, ring.power(a, s)};
}

StrongPiWitness strong_pi_from_trajectory(const FiniteRing& ring, Element a) {
    const auto t = ring.power_trajectory(a);
    const std::uint32_t n = t.preperiod;
    // a^(n+1) a^s = a^n when s = -1 (mod period), s >= 1.
    std::uint64_t s = 1;
    while ((n + 1ull + s) % t.period != n % t.period) ++s;
    const auto fit = fitting_idempotent(ring, a);
    return {n, ring.power(a, s), fit.e, fit.corner_inverse};
}

std::optional<WnclWitness> find_wncl(const RingContext& ctx, Element a) {
    const auto& ring = ctx.ring();
    if (ring.unital()) {
        const auto w = wncl_from_pi_regular(ring, a, pi_regular_from_trajectory(ring, a));
        if (check(ring, a, w)) return w;
    }
    return wncl_witness(ctx, a);
}

std::optional<PiRegularWitness> find_pi_regular(const RingContext& ctx, Element a) {
    const auto w = pi_regular_from_trajectory(ctx.ring(), a);
    if (check(ctx.ring(), a, w)) return w;
    return pi_regular_witness(ctx, a);
}

std::optional<StrongPiWitness> find_strong_pi(const RingContext& ctx, Element a) {
    ctx.ring().one();
    const auto w = strong_pi_from_trajectory(ctx.ring(), a);
    if (check(ctx.ring(), a, w)) return w;
    return strong_pi_witness(ctx, a);
}

std::optional<ExchangeWitness> find_exchange(const RingContext& ctx, Element a) {
    const auto& ring = ctx.ring();
    const Element one = ring.one();
    if (auto primal = find_wncl(ctx, ring.neg(a))) {
        const auto alt = alt_from_primal(ring, a, *primal);
        const ExchangeWitness w{alt.e, alt.x, ring.mul(ring.complement(alt.e), ring.add(one, alt.q))};
        if (check(ring, a, w)) return w;
    }
    return exchange_witness(ctx, a);
}

}  // namespace ringlab
