#include <doctest.h>

#include "ringlab/structure.hpp"
#include "support.hpp"

using namespace ringlab;
using test::make;
using test::raw;
using V = std::vector<oracle::u32>;

TEST_CASE("idempotents") {
    CHECK(raw(idempotents(make("Z4"))) == V{0, 1});
    CHECK(raw(idempotents(make("Z6"))) == V{0, 1, 3, 4});
    CHECK(idempotents(make("M2(Z2)")).size() == 8);
}

TEST_CASE("nilpotents") {
    auto n = nilpotents(make("Z4"));
    CHECK(raw(n.members) == V{0, 2});
    CHECK(n.index_of(Element{2}) == 2);
    CHECK(n.index_of(Element{0}) == 1);
    n = nilpotents(make("Z8"));
    CHECK(raw(n.members) == V{0, 2, 4, 6});
    CHECK(n.index_of(Element{2}) == 3);
    CHECK(raw(nilpotents(make("Z6")).members) == V{0});
}

TEST_CASE("units") {
    const auto u = units(make("Z6"));
    CHECK(raw(u.members) == V{1, 5});
    CHECK(u.inverse_of(Element{5}) == Element{5});
    CHECK(units(make("M2(Z2)")).members.size() == 6);
    CHECK(raw(units(make("Z1")).members) == V{0});
    CHECK_THROWS_AS(units(make("Ideal(Z4,{2})")), NonUnitalError);
}

TEST_CASE("unit inverses form an involution") {
    const auto r = make("M2(Z3)");
    const auto u = units(r);
    CHECK(u.members.size() == 48);
    for (auto x : u.members) {
        const auto y = u.inverse_of(x);
        CHECK(r.mul(x, y) == r.one());
        CHECK(r.mul(y, x) == r.one());
        CHECK(u.inverse_of(y) == x);
    }
}

TEST_CASE("center") {
    CHECK(center(make("Z12")).size() == 12);
    const auto m = make("M2(Z2)");
    CHECK(raw(center(m)) == V{0, m.one().index});
    const auto t = make("T2(Z2)");
    CHECK(raw(center(t)) == V{0, t.one().index});
}

TEST_CASE("Jacobson radical examples") {
    CHECK(raw(jacobson_radical(make("Z4")).members) == V{0, 2});
    CHECK(raw(jacobson_radical(make("Z6")).members) == V{0});
    const auto z2 = make("Z2");
    const auto t = make("T2(Z2)");
    const auto j = jacobson_radical(t);
    V strict;
    for (Index x = 0; x < t.order(); ++x) {
        const auto m = layout::triangular_entries(z2, 2, Element{x});
        if (m[0] == Element{0} && m[3] == Element{0}) strict.push_back(x);
    }
    CHECK(raw(j.members) == strict);
    CHECK(strict.size() == 2);
    CHECK_THROWS_AS(jacobson_radical(make("Ideal(Z4,{2})")), NonUnitalError);
}

TEST_CASE("generated ideals") {
    const auto z6 = make("Z6");
    CHECK(raw(ideal_generated(z6, std::vector<Element>{Element{2}}).members) == V{0, 2, 4});
    CHECK(raw(ideal_generated(z6, {}).members) == V{0});
    const auto t = make("T2(Z2)");
    const auto z2 = make("Z2");
    const auto e12 = layout::triangular_element(z2, 2, std::vector<Element>{Element{0}, Element{1}, Element{0}, Element{0}});
    CHECK(raw(ideal_generated(t, std::vector<Element>{e12}).members) == V{0, e12.index});
    // Two-sided closure in a noncommutative ring: any nonzero matrix generates M2(Z2).
    const auto m = make("M2(Z2)");
    CHECK(ideal_generated(m, std::vector<Element>{Element{1}}).size() == 16);
}

TEST_CASE("ideal validation") {
    const auto z6 = make("Z6");
    CHECK_FALSE(ideal_violation(z6, {Element{0}, Element{3}}).has_value());
    CHECK(ideal_violation(z6, {Element{0}, Element{1}}).has_value());
    CHECK_THROWS_AS(Ideal::from_members(z6, {Element{0}, Element{2}}), PreconditionError);
    // diag(1,0) alone is not closed under addition with anything else, and not an ideal.
    const auto t = make("T2(Z2)");
    const auto z2 = make("Z2");
    const auto e11 = layout::triangular_element(z2, 2, std::vector<Element>{Element{1}, Element{0}, Element{0}, Element{0}});
    CHECK(ideal_violation(t, {Element{0}, e11}).has_value());
}

TEST_CASE("nil ideals") {
    const auto z4 = make("Z4");
    CHECK(is_nil_ideal(z4, Ideal::from_members(z4, {Element{0}, Element{2}})));
    const auto z6 = make("Z6");
    CHECK_FALSE(is_nil_ideal(z6, Ideal::from_members(z6, {Element{0}, Element{2}, Element{4}})));
    CHECK(is_nil_ideal(z6, ideal_generated(z6, {})));
}

TEST_CASE("bounded index and abelian") {
    CHECK(bounded_index(make("Z8")) == 3);
    CHECK(bounded_index(make("M2(Z2)")) == 2);
    CHECK(bounded_index(make("Z6")) == 1);
    CHECK(is_abelian(make("Z12")));
    CHECK_FALSE(is_abelian(make("M2(Z2)")));
    CHECK_FALSE(is_abelian(make("T2(Z2)")));
    CHECK(is_abelian(make("Triv(Z2)")));
}

TEST_CASE("structure sets agree with the oracle on the corpus") {
    for (const auto& s : test::oracle_corpus()) {
        INFO(s.spec);
        const auto ring = make(s.spec);
        const auto& t = s.table;
        CHECK(raw(idempotents(ring)) == oracle::idempotents(t));
        const auto nil = nilpotents(ring);
        CHECK(raw(nil.members) == oracle::nilpotents(t));
        for (auto x : nil.members) CHECK(nil.index_of(x) == oracle::nil_index(t, x.index));
        CHECK(raw(units(ring).members) == oracle::units(t));
        CHECK(raw(center(ring)) == oracle::center(t));
        CHECK(raw(jacobson_radical(ring).members) == oracle::radical(t));
        CHECK(bounded_index(ring) == oracle::bounded_index(t));
        CHECK(is_abelian(ring) == oracle::abelian(t));
    }
}

TEST_CASE("structure invariants") {
    for (const auto& s : test::oracle_corpus()) {
        INFO(s.spec);
        const RingContext ctx(make(s.spec));
        const auto& r = ctx.ring();
        CHECK(ctx.idempotents().contains(r.zero()));
        CHECK(ctx.idempotents().contains(r.one()));
        CHECK(ctx.nilpotents().members.contains(r.zero()));
        CHECK(ctx.units().members.contains(r.one()));
        // The center is a commutative subring.
        for (auto a : ctx.center())
            for (auto b : ctx.center()) {
                CHECK(ctx.center().contains(r.add(a, b)));
                CHECK(ctx.center().contains(r.mul(a, b)));
                CHECK(r.mul(a, b) == r.mul(b, a));
            }
        // The radical is a two-sided ideal; nil in a finite ring.
        CHECK_FALSE(ideal_violation(r, ctx.radical().members.members()).has_value());
        CHECK(is_nil_ideal(r, ctx.radical()));
        // Cached values equal direct computation.
        CHECK(ctx.idempotents() == idempotents(r));
        CHECK(ctx.abelian() == is_abelian(r));
        const auto tables = structure_tables(r);
        CHECK(tables.idempotents == ctx.idempotents());
        CHECK(tables.bounded_index == bounded_index(r));
        REQUIRE(tables.radical.has_value());
        CHECK(tables.radical->members == ctx.radical().members);
    }
}

TEST_CASE("non-unital structure") {
    const RingContext ctx(make("Ideal(Z4,{2})"));
    CHECK(ctx.idempotents().size() == 1);
    CHECK(ctx.nilpotents().members.size() == 2);
    CHECK(ctx.center().size() == 2);
    CHECK_THROWS_AS(ctx.units(), NonUnitalError);
    const auto tables = structure_tables(ctx.ring());
    CHECK_FALSE(tables.units.has_value());
    CHECK_FALSE(tables.radical.has_value());
}
