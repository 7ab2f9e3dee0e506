#pragma once

#include <string>
#include <vector>

#include "oracle.hpp"
#include "ringlab/construct.hpp"
#include "ringlab/grammar.hpp"
#include "ringlab/structure.hpp"

namespace test {

inline ringlab::FiniteRing make(const std::string& text) { return ringlab::build(ringlab::parse_spec(text)); }

inline bool same_tables(const ringlab::FiniteRing& ring, const oracle::Table& t) {
    using ringlab::Element;
    if (ring.order() != t.n || ring.zero().index != t.zero) return false;
    if (ring.maybe_one().has_value() != t.one.has_value()) return false;
    if (t.one && ring.one().index != *t.one) return false;
    for (oracle::u32 a = 0; a < t.n; ++a)
        for (oracle::u32 b = 0; b < t.n; ++b)
            if (ring.add(Element{a}, Element{b}).index != t.add(a, b) ||
                ring.mul(Element{a}, Element{b}).index != t.mul(a, b))
                return false;
    return true;
}

inline std::vector<oracle::u32> raw(const std::vector<ringlab::Element>& xs) {
    std::vector<oracle::u32> out;
    for (auto x : xs) out.push_back(x.index);
    return out;
}

inline std::vector<oracle::u32> raw(const ringlab::ElementSet& xs) { return raw(xs.members()); }

/// Default-corpus members with their oracle tables (IdealRing excluded).
struct Sample {
    std::string spec;
    oracle::Table table;
};

inline std::vector<Sample> oracle_corpus() {
    using namespace oracle;
    const auto z2 = zn(2), z3 = zn(3), z4 = zn(4);
    return {
        {"Z2", z2},
        {"Z3", z3},
        {"Z4", z4},
        {"Z6", zn(6)},
        {"Z8", zn(8)},
        {"Z12", zn(12)},
        {"Z2xZ2", product(z2, z2)},
        {"Z2xZ4", product(z2, z4)},
        {"Triv(Z2)", triv(z2)},
        {"Z2[x]/(x^2)", poly(z2, 2)},
        {"Z4[x]/(x^2)", poly(z4, 2)},
        {"T2(Z2)", triangular(z2, 2)},
        {"T2(Z4)", triangular(z4, 2)},
        {"M2(Z2)", matrix(z2, 2)},
        {"M2(Z3)", matrix(z3, 2)},
        {"M2(Z4)", matrix(z4, 2)},
    };
}

}  // namespace test
