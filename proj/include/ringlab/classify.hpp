#pragma once

// Ring-level verdicts: each property is the universal quantification of the
// matching element decider.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/structure.hpp"

namespace ringlab {

enum class Tri { False, True, NotApplicable };

const char* to_string(Tri value);
inline Tri tri(bool b) { return b ? Tri::True : Tri::False; }

enum class Property {
    WeaklyNilClean,
    Clean,
    NilClean,
    Exchange,
    PiRegular,
    StronglyPiRegular,
    StronglyRegular,
    Abelian,
    UniqueIdempotent,
    UniqueNilpotent,
};

inline constexpr Property all_properties[] = {
    Property::WeaklyNilClean,   Property::Clean,           Property::NilClean,
    Property::Exchange,         Property::PiRegular,       Property::StronglyPiRegular,
    Property::StronglyRegular,  Property::Abelian,         Property::UniqueIdempotent,
    Property::UniqueNilpotent,
};

/// JSON key, e.g. "weakly_nil_clean".
const char* property_key(Property p);

struct ClassificationReport {
    std::string spec;
    std::size_t order = 0;
    bool unital = false;
    std::vector<std::pair<Property, Tri>> properties;
    /// First element violating each false property.
    std::vector<std::pair<Property, Element>> counterexamples;

    std::size_t idempotents = 0;
    std::size_t nilpotents = 0;
    std::optional<std::size_t> units;
    std::size_t center = 0;
    std::optional<std::size_t> radical;
    std::uint32_t bounded_index = 1;

    /// Seconds spent per decider, in evaluation order.
    std::vector<std::pair<std::string, double>> timings;
    /// Set instead of everything else when the spec could not be built.
    std::optional<std::string> error;

    Tri get(Property p) const;
};

ClassificationReport classify(const RingContext& ctx);

}  // namespace ringlab
