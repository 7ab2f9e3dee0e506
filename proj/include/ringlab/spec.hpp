#pragma once

// Expression language describing how a finite ring is assembled.

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace ringlab {

struct RingSpec;
using SpecPtr = std::shared_ptr<const RingSpec>;

namespace spec_node {

struct Zn {
    std::uint32_t n;
};
struct Product {
    std::vector<SpecPtr> parts;
};
struct Matrix {
    std::uint32_t k;
    SpecPtr base;
};
struct Triangular {
    std::uint32_t k;
    SpecPtr base;
};
/// base[X]/(X^n)
struct PolyMod {
    SpecPtr base;
    std::uint32_t n;
};
/// base (+) base with (a,x)(b,y) = (ab, ay + xb)
struct TrivialExt {
    SpecPtr base;
};
struct Quotient {
    SpecPtr base;
    std::vector<std::uint32_t> generators;
};
struct Corner {
    SpecPtr base;
    std::uint32_t e;
};
struct Opposite {
    SpecPtr base;
};
struct IdealRing {
    SpecPtr base;
    std::vector<std::uint32_t> generators;
};

}  // namespace spec_node

struct RingSpec {
    using Node = std::variant<spec_node::Zn, spec_node::Product, spec_node::Matrix,
                              spec_node::Triangular, spec_node::PolyMod, spec_node::TrivialExt,
                              spec_node::Quotient, spec_node::Corner, spec_node::Opposite,
                              spec_node::IdealRing>;
    Node node;
};

namespace spec {

SpecPtr zn(std::uint32_t n);
SpecPtr product(std::vector<SpecPtr> parts);
SpecPtr matrix(std::uint32_t k, SpecPtr base);
SpecPtr triangular(std::uint32_t k, SpecPtr base);
SpecPtr poly_mod(SpecPtr base, std::uint32_t n);
SpecPtr trivial_ext(SpecPtr base);
SpecPtr quotient(SpecPtr base, std::vector<std::uint32_t> generators);
SpecPtr corner(SpecPtr base, std::uint32_t e);
SpecPtr opposite(SpecPtr base);
SpecPtr ideal_ring(SpecPtr base, std::vector<std::uint32_t> generators);

}  // namespace spec

/// Canonical textual form, e.g. "M2(Z2xZ4)" or "Ideal(Z4,{2})".
std::string to_string(const RingSpec& spec);

bool operator==(const RingSpec& lhs, const RingSpec& rhs);

}  // namespace ringlab
