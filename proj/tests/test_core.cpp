#include <doctest.h>

#include "ringlab/core.hpp"
#include "support.hpp"

using namespace ringlab;
using test::make;

TEST_CASE("Z_n arithmetic") {
    const auto z6 = make("Z6");
    CHECK(z6.order() == 6);
    CHECK(z6.unital());
    CHECK(z6.add(Element{4}, Element{5}) == Element{3});
    CHECK(z6.mul(Element{4}, Element{5}) == Element{2});
    CHECK(z6.neg(Element{2}) == Element{4});
    CHECK(z6.sub(Element{1}, Element{3}) == Element{4});
    CHECK(z6.complement(Element{4}) == Element{3});
    CHECK(z6.mul(Element{2}, Element{3}, Element{5}) == Element{0});
}

TEST_CASE("element lookup is range checked") {
    const auto z4 = make("Z4");
    CHECK(z4.element(3) == Element{3});
    CHECK_THROWS_AS(z4.element(4), RingError);
    CHECK(z4.contains(Element{3}));
    CHECK_FALSE(z4.contains(Element{4}));
}

TEST_CASE("power") {
    CHECK(make("Z8").power(Element{2}, 3) == Element{0});
    CHECK(make("Z6").power(Element{5}, 2) == Element{1});
    const auto m = make("M2(Z2)");
    for (Index i = 0; i < m.order(); ++i) {
        const Element e{i};
        if (!m.is_idempotent(e)) continue;
        for (std::uint64_t k : {1u, 2u, 7u, 1000u}) CHECK(m.power(e, k) == e);
    }
    CHECK(power(make("Z5"), Element{2}, 4) == Element{1});
}

TEST_CASE("power trajectory examples") {
    auto t = make("Z4").power_trajectory(Element{2});
    CHECK(t.preperiod == 2);
    CHECK(t.period == 1);
    t = make("Z6").power_trajectory(Element{2});
    CHECK(t.preperiod == 1);
    CHECK(t.period == 2);
    t = make("Z6").power_trajectory(Element{3});
    CHECK(t.preperiod == 1);
    CHECK(t.period == 1);
}

TEST_CASE("power trajectory is the smallest (preperiod, period) pair") {
    for (const auto& s : test::oracle_corpus()) {
        if (s.table.n > 64) continue;
        const auto ring = make(s.spec);
        for (Index a = 0; a < ring.order(); ++a) {
            // Brute force: first repeat in the sequence a^1, a^2, ...
            std::vector<oracle::u32> seq{a};
            oracle::u32 pre = 0, per = 0;
            for (;;) {
                const auto next = s.table.mul(seq.back(), a);
                const auto it = std::find(seq.begin(), seq.end(), next);
                if (it != seq.end()) {
                    pre = oracle::u32(it - seq.begin()) + 1;
                    per = oracle::u32(seq.size()) - (pre - 1);
                    break;
                }
                seq.push_back(next);
            }
            const auto t = ring.power_trajectory(Element{a});
            INFO(s.spec << " a=" << a);
            CHECK(t.preperiod == pre);
            CHECK(t.period == per);
            CHECK(t.preperiod <= ring.order());
            CHECK(t.period <= ring.order());
        }
    }
}

TEST_CASE("nil index") {
    const auto z8 = make("Z8");
    CHECK(z8.nil_index(Element{0}) == 1u);
    CHECK(z8.nil_index(Element{2}) == 3u);
    CHECK(z8.nil_index(Element{4}) == 2u);
    CHECK_FALSE(z8.nil_index(Element{3}).has_value());
    CHECK(z8.is_nilpotent(Element{6}));
    CHECK_FALSE(z8.is_nilpotent(Element{1}));
}

TEST_CASE("non-unital rings refuse one()") {
    const auto i = make("Ideal(Z4,{2})");
    CHECK_FALSE(i.unital());
    CHECK_THROWS_AS(i.one(), NonUnitalError);
    CHECK_THROWS_AS(i.complement(Element{0}), NonUnitalError);
}

TEST_CASE("validate_axioms accepts built rings") {
    for (const auto& s : test::oracle_corpus()) {
        INFO(s.spec);
        CHECK_FALSE(validate_axioms(make(s.spec)).has_value());
    }
    CHECK_FALSE(validate_axioms(make("Ideal(Z4,{2})")).has_value());
}

TEST_CASE("zero ring is unital with one = zero") {
    const auto z1 = make("Z1");
    CHECK(z1.order() == 1);
    CHECK(z1.unital());
    CHECK(z1.one() == z1.zero());
    CHECK_FALSE(validate_axioms(z1).has_value());
}

namespace {

FiniteRing z4_with(std::size_t a, std::size_t b, Index value) {
    const auto t = oracle::zn(4);
    std::vector<Index> add(t.add_t.begin(), t.add_t.end()), mul(t.mul_t.begin(), t.mul_t.end());
    mul[a * 4 + b] = value;
    return FiniteRing::from_tables(4, add, mul, Element{0}, Element{1}, "Z4*");
}

bool violated(const FiniteRing& r, const AxiomFailure& f) {
    const auto [x, y, z] = f.elements;
    switch (f.axiom) {
    case Axiom::MultiplicativeAssociativity: return r.mul(r.mul(x, y), z) != r.mul(x, r.mul(y, z));
    case Axiom::LeftDistributivity: return r.mul(x, r.add(y, z)) != r.add(r.mul(x, y), r.mul(x, z));
    case Axiom::RightDistributivity: return r.mul(r.add(x, y), z) != r.add(r.mul(x, z), r.mul(y, z));
    case Axiom::ZeroAbsorption: return r.mul(x, r.zero()) != r.zero() || r.mul(r.zero(), x) != r.zero();
    case Axiom::Unity: return r.mul(r.one(), x) != x || r.mul(x, r.one()) != x;
    default: return false;
    }
}

}  // namespace

TEST_CASE("corrupted Z4 table is rejected with a replayable triple") {
    const auto bad = z4_with(2, 3, 1);
    const auto verdict = validate_axioms(bad);
    REQUIRE(verdict.has_value());
    CHECK(violated(bad, *verdict));
    CHECK_FALSE(verdict->describe().empty());
    CHECK(validate_axioms(z4_with(2, 3, 2)) == std::nullopt);  // the genuine entry
}

TEST_CASE("every single-entry corruption of Z4 multiplication is detected") {
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
            for (Index v = 0; v < 4; ++v) {
                if (v == (a * b) % 4) continue;
                const auto bad = z4_with(a, b, v);
                const auto verdict = validate_axioms(bad);
                INFO(a << "*" << b << " -> " << v);
                REQUIRE(verdict.has_value());
                CHECK(violated(bad, *verdict));
            }
}

TEST_CASE("corrupted addition is rejected") {
    const auto t = oracle::zn(3);
    std::vector<Index> add(t.add_t.begin(), t.add_t.end()), mul(t.mul_t.begin(), t.mul_t.end());
    add[1 * 3 + 2] = 1;  // 1 + 2 = 1 breaks commutativity
    const auto verdict = validate_axioms(FiniteRing::from_tables(3, add, mul, Element{0}, Element{1}, "bad"));
    REQUIRE(verdict.has_value());
    CHECK(std::string(to_string(verdict->axiom)).size() > 0);
}
