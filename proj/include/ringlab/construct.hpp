#pragma once

// Builders turning a RingSpec (or already-built rings) into FiniteRing values.
//
// Enumeration orders: Z_n by residue; every composite ring is a mixed-radix
// number over its components with the first listed component most significant
// (product parts in order, matrix entries row-major, polynomial coefficients
// constant term first, trivial extension as (ring, module)). Subset rings
// (corners, ideals, centers) number their members by increasing parent index;
// quotients number cosets by increasing minimal representative.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ringlab/core.hpp"
#include "ringlab/spec.hpp"

namespace ringlab {

struct Ideal;

struct BuildOptions {
    std::size_t max_order = 65536;
    std::size_t table_cap = FiniteRing::default_table_cap;
    /// Built rings up to this order are checked with validate_axioms.
    std::size_t validate_cap = 256;
    bool validate_above_cap = false;

    /// Defaults, with RINGLAB_MAX_ORDER overriding max_order when set.
    static BuildOptions from_environment();
};

/// Raised when a built ring fails validate_axioms (an implementation bug).
class InvalidRingError : public RingError {
public:
    using RingError::RingError;
};

FiniteRing build(const RingSpec& spec, const BuildOptions& options = {});
inline FiniteRing build(const SpecPtr& spec, const BuildOptions& options = {}) {
    return build(*spec, options);
}

/// A ring carried by a subset of a parent ring, with the map back to it.
struct SubRing {
    FiniteRing ring;
    std::vector<Element> embedding;  // sub index -> parent element
    std::vector<std::int64_t> position;  // parent index -> sub index, or -1

    Element to_parent(Element x) const { return embedding.at(x.index); }
    /// Parent element as a sub element; throws if it is not a member.
    Element from_parent(Element x) const;
    bool contains_parent(Element x) const {
        return x.index < position.size() && position[x.index] >= 0;
    }
};

struct QuotientRing {
    FiniteRing ring;
    std::vector<Element> projection;       // parent index -> coset
    std::vector<Element> representatives;  // coset -> minimal parent element

    Element project(Element x) const { return projection.at(x.index); }
    Element representative(Element coset) const { return representatives.at(coset.index); }
};

namespace construct {

FiniteRing zn_ring(std::uint32_t n, const BuildOptions& options = {});
FiniteRing product_ring(const std::vector<FiniteRing>& parts, const BuildOptions& options = {});
FiniteRing matrix_ring(const FiniteRing& base, std::uint32_t k, const BuildOptions& options = {});
FiniteRing triangular_ring(const FiniteRing& base, std::uint32_t k,
                           const BuildOptions& options = {});
FiniteRing poly_mod_ring(const FiniteRing& base, std::uint32_t n,
                         const BuildOptions& options = {});
FiniteRing trivial_extension(const FiniteRing& base, const BuildOptions& options = {});

/// Same elements and addition, multiplication reversed.
FiniteRing opposite(const FiniteRing& ring, const BuildOptions& options = {});

/// eRe with unity e. Throws PreconditionError when e is not idempotent.
SubRing corner(const FiniteRing& ring, Element e, const BuildOptions& options = {});

/// The two-sided ideal generated by gens, as a (possibly non-unital) ring.
SubRing ideal_ring(const FiniteRing& ring, const std::vector<Element>& gens,
                   const BuildOptions& options = {});

/// Arbitrary subring given by a member set closed under the operations.
/// `one` must be a member or absent; the identity is not searched for.
SubRing subring(const FiniteRing& ring, std::vector<Element> members,
                std::optional<Element> one, std::string spec,
                const BuildOptions& options = {});

/// R/I with minimal coset representatives. I must be an ideal of R.
QuotientRing quotient(const FiniteRing& ring, const Ideal& ideal, const BuildOptions& options = {});

}  // namespace construct

/// Helpers translating between composite elements and their components.
namespace layout {

std::vector<Element> product_components(const std::vector<FiniteRing>& parts, Element x);
Element product_element(const std::vector<FiniteRing>& parts, std::span<const Element> components);

/// Full k x k entries, row-major.
std::vector<Element> matrix_entries(const FiniteRing& base, std::uint32_t k, Element x);
Element matrix_element(const FiniteRing& base, std::uint32_t k, std::span<const Element> entries);

/// Full k x k entries of an upper triangular matrix (zeros below the diagonal).
std::vector<Element> triangular_entries(const FiniteRing& base, std::uint32_t k, Element x);
/// Encodes the upper triangle of a full k x k entry list; entries below the
/// diagonal are ignored.
Element triangular_element(const FiniteRing& base, std::uint32_t k,
                           std::span<const Element> entries);

/// Coefficients c0..c(n-1).
std::vector<Element> poly_coefficients(const FiniteRing& base, std::uint32_t n, Element x);
Element poly_element(const FiniteRing& base, std::uint32_t n, std::span<const Element> coeffs);

/// (ring part, module part).
std::pair<Element, Element> trivial_ext_parts(const FiniteRing& base, Element x);
Element trivial_ext_element(const FiniteRing& base, Element ring_part, Element module_part);

}  // namespace layout

}  // namespace ringlab
