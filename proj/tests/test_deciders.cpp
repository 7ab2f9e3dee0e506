#include <doctest.h>

#include <set>

#include "ringlab/classify.hpp"
#include "ringlab/deciders.hpp"
#include "support.hpp"

using namespace ringlab;
using test::make;

namespace {

WnclWitness primal(Index e, Index q, Index x) { return {Element{e}, Element{q}, Element{x}, WitnessForm::Primal}; }

}  // namespace

TEST_CASE("primal witness examples") {
    const RingContext z3(make("Z3"));
    CHECK(wncl_witness(z3, Element{2}) == primal(1, 0, 2));
    const RingContext z8(make("Z8"));
    for (Index a : {0u, 2u, 4u, 6u}) CHECK(wncl_witness(z8, Element{a}) == primal(0, a, 0));
    const RingContext z6(make("Z6"));
    for (Index a : {0u, 1u, 3u, 4u}) {
        const auto w = wncl_witness(z6, Element{a});
        REQUIRE(w);
        CHECK(w->q == Element{0});
        CHECK(check(z6.ring(), Element{a}, primal(a, 0, 0)));
    }
}

TEST_CASE("nilpotents and idempotents are weakly nil clean in any ring") {
    for (const auto& s : test::oracle_corpus()) {
        const RingContext ctx(make(s.spec));
        for (auto q : ctx.nilpotents().members) CHECK(check(ctx.ring(), q, primal(0, q.index, 0)));
        for (auto e : ctx.idempotents()) CHECK(check(ctx.ring(), e, primal(e.index, 0, 0)));
    }
}

TEST_CASE("alternate witness examples") {
    const RingContext z4(make("Z4"));
    auto w = wncl_witness_alt(z4, Element{2});
    REQUIRE(w);
    CHECK(w->e == Element{0});
    CHECK(w->q == Element{2});
    CHECK(check(z4.ring(), Element{2}, *w));
    w = wncl_witness_alt(z4, Element{1});
    REQUIRE(w);
    CHECK(check(z4.ring(), Element{1}, WnclWitness{Element{1}, Element{0}, Element{1}, WitnessForm::Alternate}));
    CHECK(check(z4.ring(), Element{0}, WnclWitness{Element{0}, Element{0}, Element{0}, WitnessForm::Alternate}));
    CHECK_THROWS_AS(wncl_witness_alt(RingContext(make("Ideal(Z4,{2})")), Element{0}), NonUnitalError);
}

TEST_CASE("pi-regular examples") {
    const RingContext z4(make("Z4")), z6(make("Z6"));
    CHECK(pi_regular_witness(z4, Element{2}) == PiRegularWitness{2, Element{0}});
    CHECK(pi_regular_witness(z6, Element{2}) == PiRegularWitness{1, Element{2}});
    CHECK(pi_regular_witness(z6, Element{5}) == PiRegularWitness{1, Element{5}});
    CHECK(check(z6.ring(), Element{2}, PiRegularWitness{1, Element{2}}));
    CHECK_FALSE(check(z6.ring(), Element{2}, PiRegularWitness{1, Element{1}}));
}

TEST_CASE("strongly pi-regular examples") {
    const RingContext z8(make("Z8")), z6(make("Z6")), z5(make("Z5"));
    auto w = strong_pi_witness(z8, Element{2});
    REQUIRE(w);
    CHECK(w->n == 3);
    CHECK(w->r == Element{0});
    CHECK(w->e == Element{0});
    w = strong_pi_witness(z5, Element{3});
    REQUIRE(w);
    CHECK(w->n == 1);
    CHECK(w->e == Element{1});
    CHECK(z5.ring().mul(Element{3}, w->corner_inverse) == Element{1});
    w = strong_pi_witness(z6, Element{2});
    REQUIRE(w);
    CHECK(w->e == Element{4});
    CHECK(check(z6.ring(), Element{2}, *w));
    CHECK_FALSE(check(z6.ring(), Element{2}, StrongPiWitness{w->n, w->r, Element{1}, w->corner_inverse}));
}

TEST_CASE("exchange examples") {
    const RingContext z6(make("Z6"));
    const auto& r = z6.ring();
    CHECK(check(r, Element{0}, ExchangeWitness{Element{0}, Element{0}, Element{1}}));
    CHECK(check(r, Element{1}, ExchangeWitness{Element{1}, Element{1}, Element{0}}));
    CHECK(check(r, Element{2}, ExchangeWitness{Element{4}, Element{2}, Element{3}}));
    // Lexicographic search prefers e = 0.
    CHECK(exchange_witness(z6, Element{2}) == ExchangeWitness{Element{0}, Element{0}, Element{5}});
    CHECK(exchange_witness(z6, Element{0}) == ExchangeWitness{Element{0}, Element{0}, Element{1}});
    CHECK(exchange_witness(z6, Element{1}) == ExchangeWitness{Element{1}, Element{1}, Element{0}});
}

TEST_CASE("clean, nil clean and strongly regular examples") {
    const RingContext z4(make("Z4")), z3(make("Z3")), z6(make("Z6"));
    CHECK(nil_clean_witness(z4, Element{3}) == SumWitness{Element{1}, Element{2}, SumKind::Nilpotent});
    CHECK_FALSE(nil_clean_witness(z3, Element{2}).has_value());
    CHECK(clean_witness(z3, Element{2}) == SumWitness{Element{0}, Element{2}, SumKind::Unit});
    CHECK(check(z3.ring(), Element{2}, SumWitness{Element{1}, Element{1}, SumKind::Unit}));
    CHECK(strongly_regular_witness(z6, Element{2}) == StronglyRegularWitness{Element{2}});
    CHECK_FALSE(strongly_regular_witness(z4, Element{2}).has_value());
    for (auto e : z6.idempotents()) CHECK(check(z6.ring(), e, StronglyRegularWitness{e}));
}

TEST_CASE("checkers reject tampered witnesses") {
    const auto r = make("Z4");
    CHECK_FALSE(check(r, Element{2}, primal(1, 0, 0)));          // wrong equation
    CHECK_FALSE(check(r, Element{2}, primal(2, 0, 0)));          // 2 is not idempotent
    CHECK_FALSE(check(r, Element{1}, primal(0, 1, 0)));          // 1 is not nilpotent
    CHECK_FALSE(check(r, Element{2}, primal(9, 0, 0)));          // out of range
    CHECK_FALSE(check(r, Element{3}, SumWitness{Element{1}, Element{2}, SumKind::Unit}));
}

TEST_CASE("traces re-evaluate the certificate") {
    const auto z3 = make("Z3");
    const auto t = trace(z3, Element{2}, primal(1, 0, 2));
    CHECK(t.find("a - e - q = 2 - 1 - 0 = 1") != std::string::npos);
    CHECK(t.find("e*x*a = 1*2*2 = 1") != std::string::npos);
    CHECK(t.find("verified") != std::string::npos);
    CHECK(trace(z3, Element{2}, primal(0, 0, 0)).find("FAILED") != std::string::npos);
}

TEST_CASE("lexicographic witnesses equal the oracle's first triple") {
    for (const auto& s : test::oracle_corpus()) {
        if (s.table.n > 16) continue;
        const RingContext ctx(make(s.spec));
        for (Index a = 0; a < ctx.ring().order(); ++a) {
            INFO(s.spec << " a=" << a);
            const auto mine = wncl_witness(ctx, Element{a});
            const auto ref = oracle::wncl(s.table, a);
            REQUIRE(mine.has_value() == ref.has_value());
            if (ref) CHECK(*mine == primal(ref->e, ref->q, ref->x));
        }
    }
}

TEST_CASE("element deciders agree with the oracle") {
    for (const auto& s : test::oracle_corpus()) {
        if (s.table.n > 64) continue;
        const RingContext ctx(make(s.spec));
        const auto& r = ctx.ring();
        const auto& t = s.table;
        for (Index i = 0; i < r.order(); ++i) {
            const Element a{i};
            INFO(s.spec << " a=" << i);
            const auto w = wncl_witness(ctx, a);
            CHECK(w.has_value() == oracle::wncl(t, i).has_value());
            const auto alt = wncl_witness_alt(ctx, a);
            CHECK(alt.has_value() == oracle::wncl_alt(t, i));
            if (alt) CHECK(check(r, a, *alt));
            const auto ex = exchange_witness(ctx, a);
            CHECK(ex.has_value() == oracle::exchange(t, i));
            if (ex) CHECK(check(r, a, *ex));
            const auto pr = pi_regular_witness(ctx, a);
            CHECK(pr.has_value() == oracle::pi_regular(t, i));
            if (pr) CHECK(check(r, a, *pr));
            const auto sp = strong_pi_witness(ctx, a);
            CHECK(sp.has_value() == oracle::strongly_pi_regular(t, i));
            if (sp) CHECK(check(r, a, *sp));
            const auto sr = strongly_regular_witness(ctx, a);
            CHECK(sr.has_value() == oracle::strongly_regular(t, i));
            if (sr) CHECK(check(r, a, *sr));
            const auto nc = nil_clean_witness(ctx, a);
            CHECK(nc.has_value() == oracle::nil_clean(t, i));
            if (nc) CHECK(check(r, a, *nc));
            const auto cl = clean_witness(ctx, a);
            CHECK(cl.has_value() == oracle::clean(t, i));
            if (cl) CHECK(check(r, a, *cl));
        }
    }
}

TEST_CASE("closed-form certificates validate on every element of M2(Z4)") {
    const RingContext ctx(make("M2(Z4)"));
    const auto& r = ctx.ring();
    for (Index i = 0; i < r.order(); ++i) {
        const Element a{i};
        CHECK(check(r, a, pi_regular_from_trajectory(r, a)));
        CHECK(check(r, a, strong_pi_from_trajectory(r, a)));
        const auto w = find_wncl(ctx, a);
        REQUIRE(w);
        CHECK(check(r, a, *w));
        const auto x = find_exchange(ctx, a);
        REQUIRE(x);
        CHECK(check(r, a, *x));
    }
}

TEST_CASE("Fitting idempotent") {
    const auto z6 = make("Z6");
    CHECK(fitting_idempotent(z6, Element{2}).e == Element{4});
    CHECK(fitting_idempotent(z6, Element{5}).e == Element{1});
    CHECK(fitting_idempotent(make("Z8"), Element{6}).e == Element{0});
    const auto m = make("M2(Z3)");
    for (Index i = 0; i < m.order(); ++i) {
        const Element a{i};
        const auto f = fitting_idempotent(m, a);
        CHECK(m.is_idempotent(f.e));
        CHECK(m.mul(f.e, a) == m.mul(a, f.e));
        CHECK(m.is_nilpotent(m.mul(a, m.complement(f.e))));
        CHECK(m.mul(m.mul(a, f.e), f.corner_inverse) == f.e);
    }
}

TEST_CASE("uniqueness counts") {
    const RingContext z4(make("Z4"));
    for (Index a = 0; a < 4; ++a) CHECK(unique_idempotent_wncl(z4, Element{a}).distinct == 1);
    const auto u = unique_nilpotent_wncl(z4, Element{1});
    CHECK(u.distinct >= 2);
    CHECK(check(z4.ring(), Element{1}, primal(1, 2, 2)));
    const RingContext z6(make("Z6"));
    for (Index a = 0; a < 6; ++a) CHECK(unique_nilpotent_wncl(z6, Element{a}).distinct == 1);
    const RingContext m(make("M2(Z2)"));
    const auto e11 = layout::matrix_element(make("Z2"), 2, std::vector<Element>{Element{1}, Element{0}, Element{0}, Element{0}});
    const auto c = unique_idempotent_wncl(m, e11);
    CHECK(c.distinct >= 2);
    for (const auto& w : c.samples) CHECK(check(m.ring(), e11, w));
    // Nilpotent a in an abelian ring: the only idempotent is 0.
    const RingContext z8(make("Z8"));
    const auto n = unique_idempotent_wncl(z8, Element{4});
    CHECK(n.distinct == 1);
    CHECK(n.samples.front().e == Element{0});
    // stop_at truncates.
    CHECK(unique_idempotent_wncl(m, e11, 1).distinct == 1);
}

TEST_CASE("uniqueness counts agree with the oracle's full enumeration") {
    for (const auto& s : test::oracle_corpus()) {
        if (s.table.n > 16) continue;
        const RingContext ctx(make(s.spec));
        for (Index a = 0; a < ctx.ring().order(); ++a) {
            std::set<oracle::u32> es, qs;
            for (const auto& t : oracle::all_wncl(s.table, a)) {
                es.insert(t.e);
                qs.insert(t.q);
            }
            INFO(s.spec << " a=" << a);
            CHECK(unique_idempotent_wncl(ctx, Element{a}).distinct == es.size());
            const auto q = unique_nilpotent_wncl(ctx, Element{a});
            CHECK(q.distinct == qs.size());
            CHECK(q.samples.size() == qs.size());
        }
    }
}

TEST_CASE("left and right strong pi-regularity agree elementwise") {
    for (const auto& s : test::oracle_corpus()) {
        const RingContext ctx(make(s.spec));
        for (Index a = 0; a < ctx.ring().order(); ++a) {
            const auto l = left_strong_pi_witness(ctx, Element{a});
            CHECK(l.has_value() == find_strong_pi(ctx, Element{a}).has_value());
            if (l) CHECK(check(ctx.ring(), Element{a}, *l));
        }
    }
}

TEST_CASE("non-unital deciders") {
    const RingContext ctx(make("Ideal(Z4,{2})"));
    CHECK(wncl_witness(ctx, Element{1}) == primal(0, 1, 0));
    CHECK(find_wncl(ctx, Element{1}).has_value());
    CHECK(nil_clean_witness(ctx, Element{1}).has_value());
    CHECK_THROWS_AS(clean_witness(ctx, Element{1}), NonUnitalError);
    CHECK_THROWS_AS(exchange_witness(ctx, Element{1}), NonUnitalError);
    CHECK_THROWS_AS(strong_pi_witness(ctx, Element{1}), NonUnitalError);
}

TEST_CASE("classify examples") {
    auto rep = classify(RingContext(make("Z2")));
    for (auto p : all_properties) CHECK(rep.get(p) == Tri::True);
    rep = classify(RingContext(make("Z3")));
    CHECK(rep.get(Property::WeaklyNilClean) == Tri::True);
    CHECK(rep.get(Property::NilClean) == Tri::False);
    rep = classify(RingContext(make("M2(Z2)")));
    CHECK(rep.get(Property::WeaklyNilClean) == Tri::True);
    CHECK(rep.get(Property::Abelian) == Tri::False);
    CHECK(rep.get(Property::UniqueIdempotent) == Tri::False);
    CHECK(rep.bounded_index == 2);
    CHECK(rep.idempotents == 8);
    CHECK(rep.nilpotents == 4);
    CHECK(rep.units == 6u);
    rep = classify(RingContext(make("Z6")));
    CHECK(rep.get(Property::StronglyRegular) == Tri::True);
    rep = classify(RingContext(make("Ideal(Z4,{2})")));
    CHECK_FALSE(rep.unital);
    CHECK(rep.get(Property::WeaklyNilClean) == Tri::True);
    CHECK(rep.get(Property::NilClean) == Tri::True);
    CHECK(rep.get(Property::Clean) == Tri::NotApplicable);
    CHECK(rep.get(Property::Abelian) == Tri::NotApplicable);
    CHECK_FALSE(rep.units.has_value());
}

TEST_CASE("ring verdicts agree with the oracle and respect the implication lattice") {
    for (const auto& s : test::oracle_corpus()) {
        const auto rep = classify(RingContext(make(s.spec)));
        const auto& t = s.table;
        auto is = [&](Property p) { return rep.get(p) == Tri::True; };
        INFO(s.spec);
        if (t.n <= 64) {
            CHECK(is(Property::WeaklyNilClean) == oracle::all(t, [&](auto a) { return oracle::wncl(t, a).has_value(); }));
            CHECK(is(Property::Clean) == oracle::all(t, [&](auto a) { return oracle::clean(t, a); }));
            CHECK(is(Property::NilClean) == oracle::all(t, [&](auto a) { return oracle::nil_clean(t, a); }));
            CHECK(is(Property::StronglyRegular) == oracle::all(t, [&](auto a) { return oracle::strongly_regular(t, a); }));
            CHECK(is(Property::Abelian) == oracle::abelian(t));
        }
        CHECK(rep.bounded_index == oracle::bounded_index(t));
        if (is(Property::StronglyRegular)) CHECK(is(Property::StronglyPiRegular));
        if (is(Property::StronglyPiRegular)) CHECK(is(Property::PiRegular));
        if (is(Property::PiRegular)) CHECK(is(Property::WeaklyNilClean));
        if (is(Property::WeaklyNilClean)) CHECK(is(Property::Exchange));
        if (is(Property::NilClean)) CHECK(is(Property::WeaklyNilClean));
        for (const auto& [p, a] : rep.counterexamples) CHECK(rep.get(p) == Tri::False);
    }
}
