#pragma once

// Constructions that turn one certificate into another: corner composition,
// pi-regular to weakly nil clean, the primal/alternate conversion, idempotent
// and witness lifting modulo nil ideals, extraction from matrix witnesses and
// the center decomposition. Each one checks the intermediate identities it
// relies on and re-validates its output; a failed identity throws RingError.

#include <optional>

#include "ringlab/construct.hpp"
#include "ringlab/structure.hpp"
#include "ringlab/witness.hpp"

namespace ringlab {

/// e = s a is idempotent, f = 1 - e, and corner_witness = (g, q, x) is a
/// primal witness for faf inside fRf written in R's coordinates. Returns
/// (e + g, q + fae, y) with a - (e + g) - (q + fae) = (e + g) y a.
WnclWitness wncl_from_corner(const FiniteRing& ring, Element a, Element e, Element s,
                             const WnclWitness& corner_witness);

/// e = r a^n, f = 1 - e; faf is nilpotent, so (0, faf, 0) is a corner
/// witness and wncl_from_corner finishes.
WnclWitness wncl_from_pi_regular(const FiniteRing& ring, Element a, const PiRegularWitness& w);

/// From a primal witness -a = e + q + e x a builds the alternate witness for
/// a: e' = u^-1 e u, q' = u^-1 - 1 with u = 1 + q.
WnclWitness alt_from_primal(const FiniteRing& ring, Element a, const WnclWitness& primal_for_neg_a);

/// 1 + q for nilpotent q, inverted by the finite geometric series.
Element unipotent_inverse(const FiniteRing& ring, Element q);

/// Iterates x <- 3x^2 - 2x^3 at most ceil(log2 |R|) + 1 times.
std::optional<Element> lift_idempotent_by_iteration(const FiniteRing& ring, const Ideal& ideal, Element x);
/// Smallest idempotent congruent to x modulo the ideal.
std::optional<Element> lift_idempotent_by_scan(const FiniteRing& ring, const Ideal& ideal, Element x);
/// Iteration with the scan as fallback. Requires a nil ideal and x^2 - x in it.
Element lift_idempotent(const FiniteRing& ring, const Ideal& ideal, Element x);

/// Lifts a primal witness for the coset of a in R/I to a primal witness in R.
WnclWitness lift_wncl_witness(const FiniteRing& ring, const Ideal& ideal, const QuotientRing& top,
                              Element a, const WnclWitness& quotient_witness);

/// Reads an alternate witness for a in an abelian base ring off an alternate
/// witness (E, Q, X) for diag(a, 0, ..., 0) in M_n(base).
WnclWitness extract_from_matrix(const RingContext& base, std::uint32_t n, Element a,
                                const FiniteRing& matrix_ring, const WnclWitness& matrix_witness);

/// Z(R) as a ring with the identity of R.
SubRing center_ring(const RingContext& ctx);

struct CenterWitness {
    Element idempotent;         // e in R, shown central
    Element element;            // a in center coordinates
    WnclWitness witness;        // primal witness in the center ring
};

/// a central, w a primal witness for a in R. Returns the decomposition
/// a = e + (1 - e)a + e(a - 1) as a witness inside `center`.
CenterWitness center_witness(const RingContext& ctx, const SubRing& center, Element a,
                             const WnclWitness& w);

}  // namespace ringlab
