#pragma once

// Finite ring abstraction: elements are canonical indices 0..order-1 and the
// ring structure is given either by materialized operation tables or by a
// backend that computes the operations structurally.

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringlab {

using Index = std::uint32_t;

/// An element of one particular FiniteRing, identified by its index in the
/// constructor's enumeration order.
struct Element {
    Index index = 0;

    constexpr Element() = default;
    constexpr explicit Element(Index i) : index(i) {}

    friend constexpr bool operator==(Element, Element) = default;
    friend constexpr auto operator<=>(Element, Element) = default;
};

class RingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by operations that need a multiplicative identity.
class NonUnitalError : public RingError {
public:
    using RingError::RingError;
};

/// Raised when a ring would exceed the configured order cap.
class CapExceededError : public RingError {
public:
    using RingError::RingError;
};

/// A caller-supplied argument violates an operation's precondition.
class PreconditionError : public RingError {
public:
    using RingError::RingError;
};

/// Structural computation of the ring operations on element indices.
class RingBackend {
public:
    virtual ~RingBackend() = default;
    virtual Index add(Index a, Index b) const = 0;
    virtual Index mul(Index a, Index b) const = 0;
    virtual Index neg(Index a) const = 0;
};

enum class Axiom {
    AdditiveIdentity,
    AdditiveInverse,
    AdditiveCommutativity,
    AdditiveAssociativity,
    MultiplicativeAssociativity,
    LeftDistributivity,
    RightDistributivity,
    ZeroAbsorption,
    Unity,
};

const char* to_string(Axiom axiom);

struct AxiomFailure {
    Axiom axiom;
    std::array<Element, 3> elements;

    std::string describe() const;
};

/// Result of validate_axioms: empty when every axiom holds.
using AxiomVerdict = std::optional<AxiomFailure>;

struct PowerTrajectory {
    std::uint32_t preperiod = 1;  // smallest i >= 1 with a^i = a^(i+p)
    std::uint32_t period = 1;
};

class FiniteRing {
public:
    /// Ring whose operations come from a backend. Tables are materialized
    /// when order <= table_cap.
    FiniteRing(std::size_t order, std::shared_ptr<const RingBackend> backend,
               Element zero, std::optional<Element> one, std::string spec,
               std::size_t table_cap = default_table_cap);

    /// Ring given directly by addition and multiplication tables (row-major,
    /// order*order entries). Negation is derived from the addition table.
    /// No validation happens here; see validate_axioms.
    static FiniteRing from_tables(std::size_t order, std::vector<Index> add,
                                  std::vector<Index> mul, Element zero,
                                  std::optional<Element> one, std::string spec);

    static constexpr std::size_t default_table_cap = 1024;

    std::size_t order() const { return impl_->order; }
    const std::string& spec() const { return impl_->spec; }
    bool unital() const { return impl_->one.has_value(); }
    bool has_tables() const { return !impl_->add_table.empty(); }
    Element zero() const { return impl_->zero; }
    std::optional<Element> maybe_one() const { return impl_->one; }
    /// The identity; throws NonUnitalError when there is none.
    Element one() const;

    Element add(Element a, Element b) const {
        const auto& t = impl_->add_table;
        if (!t.empty()) return Element{t[std::size_t(a.index) * impl_->order + b.index]};
        return Element{impl_->backend->add(a.index, b.index)};
    }
    Element mul(Element a, Element b) const {
        const auto& t = impl_->mul_table;
        if (!t.empty()) return Element{t[std::size_t(a.index) * impl_->order + b.index]};
        return Element{impl_->backend->mul(a.index, b.index)};
    }
    Element neg(Element a) const {
        const auto& t = impl_->neg_table;
        if (!t.empty()) return Element{t[a.index]};
        return Element{impl_->backend->neg(a.index)};
    }
    Element sub(Element a, Element b) const { return add(a, neg(b)); }
    Element mul(Element a, Element b, Element c) const { return mul(mul(a, b), c); }
    /// 1 - a; requires unity.
    Element complement(Element a) const { return sub(one(), a); }

    bool contains(Element a) const { return a.index < impl_->order; }
    Element element(Index i) const;

    /// a^k for k >= 1 by repeated squaring.
    Element power(Element a, std::uint64_t k) const;
    /// Preperiod and period of the sequence a, a^2, a^3, ...
    PowerTrajectory power_trajectory(Element a) const;

    bool is_idempotent(Element a) const { return mul(a, a) == a; }
    /// Smallest k >= 1 with a^k = 0, or nullopt.
    std::optional<std::uint32_t> nil_index(Element a) const;
    bool is_nilpotent(Element a) const { return nil_index(a).has_value(); }

    /// Same ring object (shared representation).
    bool same_as(const FiniteRing& other) const { return impl_ == other.impl_; }

    /// Tables equal entry by entry (order, zero, one, add, mul).
    bool tables_equal(const FiniteRing& other) const;

private:
    struct Impl {
        std::size_t order = 0;
        std::shared_ptr<const RingBackend> backend;
        std::vector<Index> add_table;
        std::vector<Index> mul_table;
        std::vector<Index> neg_table;
        Element zero;
        std::optional<Element> one;
        std::string spec;
    };

    explicit FiniteRing(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    std::shared_ptr<const Impl> impl_;
};

/// Exhaustive check of the ring axioms; O(order^3).
AxiomVerdict validate_axioms(const FiniteRing& ring);

/// Free-function spellings of the ring power operations.
inline Element power(const FiniteRing& ring, Element a, std::uint64_t k) {
    return ring.power(a, k);
}
inline PowerTrajectory power_trajectory(const FiniteRing& ring, Element a) {
    return ring.power_trajectory(a);
}

}  // namespace ringlab
