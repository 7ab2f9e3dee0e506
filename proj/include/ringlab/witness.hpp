#pragma once

// Certificates for the element properties. Every witness can be re-checked by
// a handful of ring operations; the check_* functions do exactly that and
// nothing more.

#include <cstdint>
#include <string>

#include "ringlab/core.hpp"

namespace ringlab {

enum class WitnessForm { Primal, Alternate };

/// Primal: a - e - q = e x a.
/// Alternate: e = x a is idempotent and 1 - e = (1 - e)(1 + q)(1 - a).
struct WnclWitness {
    Element e;
    Element q;
    Element x;
    WitnessForm form = WitnessForm::Primal;

    friend bool operator==(const WnclWitness&, const WnclWitness&) = default;
};

/// a^n r a^n = a^n.
struct PiRegularWitness {
    std::uint32_t n = 1;
    Element r;

    friend bool operator==(const PiRegularWitness&, const PiRegularWitness&) = default;
};

/// a^n = a^(n+1) r, and the Fitting idempotent e: ea = ae, (ae) v = v (ae) = e
/// with v = e v e, and a(1 - e) nilpotent.
struct StrongPiWitness {
    std::uint32_t n = 1;
    Element r;
    Element e;
    Element corner_inverse;

    friend bool operator==(const StrongPiWitness&, const StrongPiWitness&) = default;
};

/// e idempotent, e = r a and 1 - e = s (1 - a).
struct ExchangeWitness {
    Element e;
    Element r;
    Element s;

    friend bool operator==(const ExchangeWitness&, const ExchangeWitness&) = default;
};

enum class SumKind { Unit, Nilpotent };

/// a = e + second with e idempotent and second a unit (clean) or nilpotent
/// (nil clean).
struct SumWitness {
    Element e;
    Element second;
    SumKind kind = SumKind::Unit;

    friend bool operator==(const SumWitness&, const SumWitness&) = default;
};

/// a = a^2 r.
struct StronglyRegularWitness {
    Element r;

    friend bool operator==(const StronglyRegularWitness&, const StronglyRegularWitness&) = default;
};

bool check(const FiniteRing& ring, Element a, const WnclWitness& w);
bool check(const FiniteRing& ring, Element a, const PiRegularWitness& w);
bool check(const FiniteRing& ring, Element a, const StrongPiWitness& w);
bool check(const FiniteRing& ring, Element a, const ExchangeWitness& w);
bool check(const FiniteRing& ring, Element a, const SumWitness& w);
bool check(const FiniteRing& ring, Element a, const StronglyRegularWitness& w);

/// Multi-line re-evaluation of every product and sum in the certificate.
std::string trace(const FiniteRing& ring, Element a, const WnclWitness& w);
std::string trace(const FiniteRing& ring, Element a, const PiRegularWitness& w);
std::string trace(const FiniteRing& ring, Element a, const StrongPiWitness& w);
std::string trace(const FiniteRing& ring, Element a, const ExchangeWitness& w);
std::string trace(const FiniteRing& ring, Element a, const SumWitness& w);
std::string trace(const FiniteRing& ring, Element a, const StronglyRegularWitness& w);

}  // namespace ringlab
