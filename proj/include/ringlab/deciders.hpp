#pragma once

// Element-level deciders. The *_witness functions search exhaustively and
// return the lexicographically smallest certificate (first field varying
// slowest). The find_* functions return any certificate, trying closed forms
// from the power trajectory before falling back to the search; ring-level
// quantification uses those.

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "ringlab/structure.hpp"
#include "ringlab/witness.hpp"

namespace ringlab {

std::optional<WnclWitness> wncl_witness(const RingContext& ctx, Element a);
/// Throws NonUnitalError.
std::optional<WnclWitness> wncl_witness_alt(const RingContext& ctx, Element a);
std::optional<PiRegularWitness> pi_regular_witness(const RingContext& ctx, Element a);
/// Throws NonUnitalError.
std::optional<StrongPiWitness> strong_pi_witness(const RingContext& ctx, Element a);
/// Throws NonUnitalError.
std::optional<ExchangeWitness> exchange_witness(const RingContext& ctx, Element a);
/// Throws NonUnitalError.
std::optional<SumWitness> clean_witness(const RingContext& ctx, Element a);
std::optional<SumWitness> nil_clean_witness(const RingContext& ctx, Element a);
std::optional<StronglyRegularWitness> strongly_regular_witness(const RingContext& ctx, Element a);

/// a^n = r a^(n+1): the left-hand form of strong pi-regularity.
struct LeftPowerWitness {
    std::uint32_t n = 1;
    Element r;
};
std::optional<LeftPowerWitness> left_strong_pi_witness(const RingContext& ctx, Element a);
bool check(const FiniteRing& ring, Element a, const LeftPowerWitness& w);

struct UniquenessCount {
    std::size_t distinct = 0;
    /// One witness per distinct value found, in increasing order of that value.
    std::vector<WnclWitness> samples;
};

/// Number of distinct idempotents e over all primal triples (e, q, x) for a.
/// Counting stops once `stop_at` distinct values are seen.
UniquenessCount unique_idempotent_wncl(const RingContext& ctx, Element a,
                                       std::size_t stop_at = std::numeric_limits<std::size_t>::max());
/// Number of distinct nilpotents q over all primal triples for a.
UniquenessCount unique_nilpotent_wncl(const RingContext& ctx, Element a,
                                      std::size_t stop_at = std::numeric_limits<std::size_t>::max());

/// Idempotent of the eventual cycle of powers of a, with the inverse of ae in
/// that cycle group.
struct FittingPair {
    Element e;
    Element corner_inverse;
};
FittingPair fitting_idempotent(const FiniteRing& ring, Element a);

/// Closed-form certificates built from the power trajectory of a.
PiRegularWitness pi_regular_from_trajectory(const FiniteRing& ring, Element a);
StrongPiWitness strong_pi_from_trajectory(const FiniteRing& ring, Element a);

std::optional<WnclWitness> find_wncl(const RingContext& ctx, Element a);
std::optional<PiRegularWitness> find_pi_regular(const RingContext& ctx, Element a);
std::optional<StrongPiWitness> find_strong_pi(const RingContext& ctx, Element a);
std::optional<ExchangeWitness> find_exchange(const RingContext& ctx, Element a);

}  // namespace ringlab
