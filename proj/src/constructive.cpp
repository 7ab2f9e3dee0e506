#include "ringlab/constructive.hpp"

#include <bit>

#include <fmt/format.h>

#include "ringlab/deciders.hpp"

namespace ringlab {

namespace {

void require(bool condition, const std::string& what) {
    if (!condition) throw PreconditionError(what);
}

void verify(bool condition, const std::string& what) {
    if (!condition) throw RingError("identity failed: " + what);
}

bool in_corner(const FiniteRing& ring, Element f, Element y) { return ring.mul(f, y, f) == y; }

}  // namespace

Element unipotent_inverse(const FiniteRing& ring, Element q) {
    const auto k = ring.nil_index(q);
    require(k.has_value(), fmt::format("{} is not nilpotent", q.index));
    // (1 + q)^-1 = sum_{i < k} (-q)^i
    const Element minus_q = ring.neg(q);
    Element term = ring.one();
    Element sum = ring.one();
    for (std::uint32_t i = 1; i < *k; ++i) {
        term = ring.mul(term, minus_q);
        sum = ring.add(sum, term);
    }
    const Element u = ring.add(ring.one(), q);
    verify(ring.mul(u, sum) == ring.one() && ring.mul(sum, u) == ring.one(), "(1+q)(1+q)^-1 = 1");
    return sum;
}

WnclWitness wncl_from_corner(const FiniteRing& ring, Element a, Element e, Element s,
                             const WnclWitness& corner_witness) {
    const Element one = ring.one();
    require(ring.is_idempotent(e), fmt::format("{} is not idempotent", e.index));
    require(ring.mul(s, a) == e, "e is not realized as s*a");
    const Element f = ring.complement(e);
    const auto [g, q, x, form] = corner_witness;
    require(form == WitnessForm::Primal, "corner witness must be primal");
    require(in_corner(ring, f, g) && in_corner(ring, f, q) && in_corner(ring, f, x),
            "corner witness lies outside fRf");
    const Element faf = ring.mul(f, a, f);
    require(check(ring, faf, corner_witness), "corner witness does not certify faf");

    const Element fae = ring.mul(f, a, e);
    const Element mu = ring.add(q, fae);
    const Element pi = ring.add(e, g);

    // mu^k = q^k + q^(k-1) fae
    const auto q_index = ring.nil_index(q).value_or(1);
    Element mu_k = mu;
    Element q_prev = one;  // q^(k-1)
    for (std::uint32_t k = 1; k <= q_index + 1; ++k) {
        const Element q_k = ring.mul(q_prev, q);
        verify(mu_k == ring.add(q_k, ring.mul(q_prev, fae)), fmt::format("mu^{} = q^{} + q^{}fae", k, k, k - 1));
        mu_k = ring.mul(mu_k, mu);
        q_prev = q_k;
    }
    verify(ring.is_nilpotent(mu), "mu nilpotent");
    verify(ring.is_idempotent(pi), "pi = e + g idempotent");
    verify(ring.mul(ring.complement(pi), ring.sub(a, mu)) == ring.zero(), "(1-pi)(a-mu) = 0");

    // pi + mu = e + fa - g x faf = (s + f - g x (f - f a s)) a
    const Element fas = ring.mul(f, a, s);
    const Element w = ring.sub(ring.add(s, f), ring.mul(ring.mul(g, x), ring.sub(f, fas)));
    verify(ring.mul(w, a) == ring.add(pi, mu), "pi + mu = w a");
    const WnclWitness out{pi, mu, ring.complement(w), WitnessForm::Primal};
    verify(check(ring, a, out), "composed witness");
    return out;
}

WnclWitness wncl_from_pi_regular(const FiniteRing& ring, Element a, const PiRegularWitness& w) {
    require(check(ring, a, w), "invalid pi-regular witness");
    const Element an = ring.power(a, w.n);
    const Element e = ring.mul(w.r, an);
    const Element s = w.n == 1 ? w.r : ring.mul(w.r, ring.power(a, w.n - 1));
    verify(ring.is_idempotent(e), "r a^n idempotent");
    const Element f = ring.complement(e);
    const Element faf = ring.mul(f, a, f);
    verify(ring.is_nilpotent(faf), "faf nilpotent");
    return wncl_from_corner(ring, a, e, s, WnclWitness{ring.zero(), faf, ring.zero(), WitnessForm::Primal});
}

WnclWitness alt_from_primal(const FiniteRing& ring, Element a, const WnclWitness& primal) {
    const Element minus_a = ring.neg(a);
    require(primal.form == WitnessForm::Primal && check(ring, minus_a, primal),
            "expected a primal witness for -a");
    const Element one = ring.one();
    const auto& [e, q, x, form] = primal;
    const Element u_inv = unipotent_inverse(ring, q);
    const Element u = ring.add(one, q);
    const Element e2 = ring.mul(u_inv, e, u);
    // e + q = (e x - 1) a and e u = e (e + q), so e2 = [u^-1 e (e x - 1)] a
    const Element x2 = ring.mul(ring.mul(u_inv, e), ring.sub(ring.mul(e, x), one));
    verify(ring.mul(x2, a) == e2, "u^-1 e u in Ra");
    const WnclWitness out{e2, ring.sub(u_inv, one), x2, WitnessForm::Alternate};
    verify(check(ring, a, out), "alternate witness");
    return out;
}

std::optional<Element> lift_idempotent_by_iteration(const FiniteRing& ring, const Ideal& ideal, Element x) {
    const auto rounds = std::bit_width(ring.order() - 1) + 1;
    Element y = x;
    for (std::size_t i = 0; i < std::size_t(rounds) && !ring.is_idempotent(y); ++i) {
        const Element y2 = ring.mul(y, y);
        const Element y3 = ring.mul(y2, y);
        // 3y^2 - 2y^3
        y = ring.sub(ring.add(ring.add(y2, y2), y2), ring.add(y3, y3));
    }
    if (!ring.is_idempotent(y) || !ideal.contains(ring.sub(y, x))) return std::nullopt;
    return y;
}

std::optional<Element> lift_idempotent_by_scan(const FiniteRing& ring, const Ideal& ideal, Element x) {
    for (Index i = 0; i < ring.order(); ++i) {
        const Element e{i};
        if (ring.is_idempotent(e) && ideal.contains(ring.sub(e, x))) return e;
    }
    return std::nullopt;
}

Element lift_idempotent(const FiniteRing& ring, const Ideal& ideal, Element x) {
    ring.element(x.index);
    require(is_nil_ideal(ring, ideal), "ideal is not nil");
    require(ideal.contains(ring.sub(ring.mul(x, x), x)), "x^2 - x is not in the ideal");
    if (auto e = lift_idempotent_by_iteration(ring, ideal, x)) return *e;
    if (auto e = lift_idempotent_by_scan(ring, ideal, x)) return *e;
    throw RingError(fmt::format("no idempotent lifts {} modulo a nil ideal", x.index));
}

WnclWitness lift_wncl_witness(const FiniteRing& ring, const Ideal& ideal, const QuotientRing& top,
                              Element a, const WnclWitness& quotient_witness) {
    require(is_nil_ideal(ring, ideal), "ideal is not nil");
    require(top.projection.size() == ring.order(), "quotient does not belong to this ring");
    const Element a_bar = top.project(a);
    require(quotient_witness.form == WitnessForm::Primal && check(top.ring, a_bar, quotient_witness),
            "invalid witness in the quotient");
    const Element e = lift_idempotent(ring, ideal, top.representative(quotient_witness.e));
    verify(top.project(e) == quotient_witness.e, "lifted idempotent maps to epsilon");
    const Element x = top.representative(quotient_witness.x);
    const Element q = ring.sub(ring.sub(a, e), ring.mul(e, x, a));
    verify(ring.is_nilpotent(q), "a - e - exa nilpotent");
    const WnclWitness out{e, q, x, WitnessForm::Primal};
    verify(check(ring, a, out), "lifted witness");
    return out;
}

WnclWitness extract_from_matrix(const RingContext& base, std::uint32_t n, Element a,
                                const FiniteRing& matrix_ring, const WnclWitness& w) {
    const auto& r = base.ring();
    r.element(a.index);
    require(base.abelian(), "base ring is not abelian");
    require(matrix_ring.spec() == fmt::format("M{}({})", n, r.spec()), "matrix ring is not M_n(base)");
    require(w.form == WitnessForm::Alternate, "matrix witness must be in alternate form");
    std::vector<Element> diag(std::size_t(n) * n, r.zero());
    diag[0] = a;
    const Element big_a = layout::matrix_element(r, n, diag);
    require(check(matrix_ring, big_a, w), "matrix witness is invalid for diag(a, 0, ...)");

    const Element e = layout::matrix_entries(r, n, w.e)[0];
    const Element alpha = layout::matrix_entries(r, n, w.q)[0];
    const Element x = layout::matrix_entries(r, n, w.x)[0];
    verify(r.is_idempotent(e) && r.mul(x, a) == e, "(1,1) entry of E is an idempotent in Ra");
    const Element f = r.complement(e);
    const Element q = r.mul(f, alpha);
    verify(r.is_nilpotent(q), "f alpha nilpotent");
    verify(f == r.mul(r.mul(f, r.add(r.one(), q)), r.complement(a)), "f = f(1+q)(1-a)");
    const WnclWitness out{e, q, x, WitnessForm::Alternate};
    verify(check(r, a, out), "extracted witness");
    return out;
}

SubRing center_ring(const RingContext& ctx) {
    const auto& ring = ctx.ring();
    return construct::subring(ring, ctx.center().members(), ring.one(),
                              fmt::format("Center({})", ring.spec()));
}

CenterWitness center_witness(const RingContext& ctx, const SubRing& center, Element a, const WnclWitness& w) {
    const auto& ring = ctx.ring();
    const Element one = ring.one();
    require(ctx.center().contains(a), fmt::format("{} is not central", a.index));
    require(w.form == WitnessForm::Primal && check(ring, a, w), "invalid witness for a");
    const auto& [e, q, x, form] = w;

    // e = e(1 - x)(1 + q)^-1 a, and then e = m^k a^k since a is central.
    const Element m = ring.mul(ring.mul(e, ring.complement(x)), unipotent_inverse(ring, q));
    verify(ring.mul(m, a) == e, "e in Ra");
    const auto nil = ring.nil_index(q).value_or(1);
    Element m_k = m, a_k = a;
    for (std::uint32_t k = 1; k <= nil; ++k) {
        verify(ring.mul(m_k, a_k) == e, fmt::format("e in Ra^{}", k));
        m_k = ring.mul(m_k, m);
        a_k = ring.mul(a_k, a);
    }
    const Element co_e = ring.complement(e);
    const Element p = ring.mul(co_e, a);
    verify(p == ring.mul(co_e, q), "(1-e)a = (1-e)q");
    verify(ring.power(p, nil) == ring.zero(), "((1-e)a)^n = 0");
    for (Index y = 0; y < ring.order(); ++y)
        verify(ring.mul(e, Element{y}) == ring.mul(Element{y}, e), "e central");

    const Element third = ring.mul(e, ring.sub(a, one));
    std::optional<Element> multiplier;
    for (auto y : center.embedding) {
        if (ring.mul(e, y, a) == third) {
            multiplier = y;
            break;
        }
    }
    verify(multiplier.has_value(), "e(a-1) in e Z(R) a");
    const Element a_z = center.from_parent(a);
    const WnclWitness out{center.from_parent(e), center.from_parent(p), center.from_parent(*multiplier),
                          WitnessForm::Primal};
    verify(check(center.ring, a_z, out), "witness inside the center");
    return {e, a_z, out};
}

}  // namespace ringlab
