#include "ringlab/witness.hpp"

#include <initializer_list>

#include <fmt/format.h>

namespace ringlab {

namespace {

bool in_range(const FiniteRing& ring, std::initializer_list<Element> xs) {
    for (auto x : xs)
        if (!ring.contains(x)) return false;
    return true;
}

std::string idempotent_line(const FiniteRing& ring, const char* name, Element e) {
    const auto sq = ring.mul(e, e);
    return fmt::format("{0}*{0} = {1}*{1} = {2} ({3})\n", name, e.index, sq.index,
                       sq == e ? "idempotent" : "NOT idempotent");
}

std::string nilpotent_line(const FiniteRing& ring, const char* name, Element q) {
    if (auto k = ring.nil_index(q)) return fmt::format("{}^{} = 0 (nilpotent)\n", name, *k);
    return fmt::format("{} = {} is NOT nilpotent\n", name, q.index);
}

std::string verdict_line(bool ok) { return ok ? "verified\n" : "FAILED\n"; }

}  // namespace

bool check(const FiniteRing& ring, Element a, const WnclWitness& w) {
    if (!in_range(ring, {a, w.e, w.q, w.x})) return false;
    if (!ring.is_idempotent(w.e) || !ring.is_nilpotent(w.q)) return false;
    if (w.form == WitnessForm::Primal)
        return ring.sub(ring.sub(a, w.e), w.q) == ring.mul(w.e, w.x, a);
    if (!ring.unital()) return false;
    if (ring.mul(w.x, a) != w.e) return false;
    const Element f = ring.complement(w.e);
    const Element u = ring.add(ring.one(), w.q);
    return f == ring.mul(ring.mul(f, u), ring.complement(a));
}

bool check(const FiniteRing& ring, Element a, const PiRegularWitness& w) {
    if (!in_range(ring, {a, w.r}) || w.n == 0) return false;
    const Element an = ring.power(a, w.n);
    return ring.mul(an, w.r, an) == an;
}

bool check(const FiniteRing& ring, Element a, const StrongPiWitness& w) {
    if (!in_range(ring, {a, w.r, w.e, w.corner_inverse}) || w.n == 0) return false;
    if (ring.power(a, w.n) != ring.mul(ring.power(a, w.n + 1), w.r)) return false;
    if (!ring.is_idempotent(w.e) || ring.mul(w.e, a) != ring.mul(a, w.e)) return false;
    const Element ae = ring.mul(a, w.e);
    const Element v = w.corner_inverse;
    if (ring.mul(w.e, v, w.e) != v) return false;
    if (ring.mul(ae, v) != w.e || ring.mul(v, ae) != w.e) return false;
    return ring.is_nilpotent(ring.sub(a, ae));
}

bool check(const FiniteRing& ring, Element a, const ExchangeWitness& w) {
    if (!ring.unital() || !in_range(ring, {a, w.e, w.r, w.s})) return false;
    return ring.is_idempotent(w.e) && ring.mul(w.r, a) == w.e &&
           ring.complement(w.e) == ring.mul(w.s, ring.complement(a));
}

bool check(const FiniteRing& ring, Element a, const SumWitness& w) {
    if (!in_range(ring, {a, w.e, w.second})) return false;
    if (!ring.is_idempotent(w.e) || ring.add(w.e, w.second) != a) return false;
    if (w.kind == SumKind::Nilpotent) return ring.is_nilpotent(w.second);
    if (!ring.unital()) return false;
    // Unit test: some power of the candidate is 1.
    const auto t = ring.power_trajectory(w.second);
    return t.preperiod == 1 && ring.power(w.second, t.period) == ring.one();
}

bool check(const FiniteRing& ring, Element a, const StronglyRegularWitness& w) {
    if (!in_range(ring, {a, w.r})) return false;
    return ring.mul(ring.mul(a, a), w.r) == a;
}

std::string trace(const FiniteRing& ring, Element a, const WnclWitness& w) {
    std::string out;
    if (w.form == WitnessForm::Primal) {
        const auto lhs = ring.sub(ring.sub(a, w.e), w.q);
        const auto rhs = ring.mul(w.e, w.x, a);
        out += fmt::format("a - e - q = {} - {} - {} = {}\n", a.index, w.e.index, w.q.index, lhs.index);
        out += fmt::format("e*x*a = {}*{}*{} = {}\n", w.e.index, w.x.index, a.index, rhs.index);
    } else {
        const auto xa = ring.mul(w.x, a);
        out += fmt::format("x*a = {}*{} = {} (e = {})\n", w.x.index, a.index, xa.index, w.e.index);
        const auto f = ring.complement(w.e);
        const auto u = ring.add(ring.one(), w.q);
        const auto rhs = ring.mul(ring.mul(f, u), ring.complement(a));
        out += fmt::format("1 - e = {}\n(1-e)(1+q)(1-a) = {}*{}*{} = {}\n", f.index, f.index, u.index,
                           ring.complement(a).index, rhs.index);
    }
    out += idempotent_line(ring, "e", w.e);
    out += nilpotent_line(ring, "q", w.q);
    return out + verdict_line(check(ring, a, w));
}

std::string trace(const FiniteRing& ring, Element a, const PiRegularWitness& w) {
    const auto an = ring.power(a, w.n);
    const auto lhs = ring.mul(an, w.r, an);
    return fmt::format("a^{} = {}\na^n*r*a^n = {}*{}*{} = {}\n", w.n, an.index, an.index, w.r.index,
                       an.index, lhs.index) +
           verdict_line(check(ring, a, w));
}

std::string trace(const FiniteRing& ring, Element a, const StrongPiWitness& w) {
    const auto an = ring.power(a, w.n);
    const auto an1 = ring.power(a, w.n + 1);
    const auto ae = ring.mul(a, w.e);
    std::string out = fmt::format("a^{} = {}\na^(n+1)*r = {}*{} = {}\n", w.n, an.index, an1.index,
                                  w.r.index, ring.mul(an1, w.r).index);
    out += idempotent_line(ring, "e", w.e);
    out += fmt::format("e*a = {}, a*e = {}\n", ring.mul(w.e, a).index, ae.index);
    out += fmt::format("(a*e)*v = {}*{} = {}, v*(a*e) = {} (unit of eRe)\n", ae.index,
                       w.corner_inverse.index, ring.mul(ae, w.corner_inverse).index,
                       ring.mul(w.corner_inverse, ae).index);
    out += nilpotent_line(ring, "a(1-e)", ring.sub(a, ae));
    return out + verdict_line(check(ring, a, w));
}

std::string trace(const FiniteRing& ring, Element a, const ExchangeWitness& w) {
    std::string out = fmt::format("r*a = {}*{} = {} (e = {})\n", w.r.index, a.index,
                                  ring.mul(w.r, a).index, w.e.index);
    out += fmt::format("1 - e = {}\ns*(1-a) = {}*{} = {}\n", ring.complement(w.e).index, w.s.index,
                       ring.complement(a).index, ring.mul(w.s, ring.complement(a)).index);
    out += idempotent_line(ring, "e", w.e);
    return out + verdict_line(check(ring, a, w));
}

std::string trace(const FiniteRing& ring, Element a, const SumWitness& w) {
    std::string out = fmt::format("e + {} = {} + {} = {} (a = {})\n",
                                  w.kind == SumKind::Unit ? "u" : "q", w.e.index, w.second.index,
                                  ring.add(w.e, w.second).index, a.index);
    out += idempotent_line(ring, "e", w.e);
    if (w.kind == SumKind::Nilpotent) out += nilpotent_line(ring, "q", w.second);
    else out += fmt::format("u = {} is a unit\n", w.second.index);
    return out + verdict_line(check(ring, a, w));
}

std::string trace(const FiniteRing& ring, Element a, const StronglyRegularWitness& w) {
    const auto sq = ring.mul(a, a);
    return fmt::format("a^2*r = {}*{} = {} (a = {})\n", sq.index, w.r.index, ring.mul(sq, w.r).index,
                       a.index) +
           verdict_line(check(ring, a, w));
}

}  // namespace ringlab
