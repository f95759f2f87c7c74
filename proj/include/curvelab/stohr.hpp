#pragma once

#include <optional>
#include <string>

#include "curvelab/mpoly.hpp"

namespace curvelab {

/// Certificate that a curve is nonclassical: U1^s X + U2^s Y + U3^s Z = H * f
/// holds exactly, with s = p^h the candidate second order. H is the constant
/// deg(f) supplied by the Euler identity; it is zero when p divides deg(f).
struct NonclassicalityWitness {
    MultiPoly f;
    uint64_t s;
    MultiPoly u1, u2, u3;
    MultiPoly h;

    std::string to_json() const;
};

/// Extracts the witness from the partial derivatives when each is an s-th
/// power; the defining identity is re-verified before returning.
std::optional<NonclassicalityWitness> extract_witness(const MultiPoly& f, uint64_t s);

/// Tries s = p, p^2, ... up to deg(f) and returns the first witness found.
std::optional<NonclassicalityWitness> search_witness(const MultiPoly& f);

/// Frobenius nonclassicality for the field of qprime elements: verdict is true
/// iff U1 X^(q'/s) + U2 Y^(q'/s) + U3 Z^(q'/s) is divisible by f, and the
/// quotient L is recorded.
struct FrobeniusCertificate {
    uint64_t s = 0;
    uint64_t qprime = 0;
    std::optional<MultiPoly> quotient;
    bool verdict = false;

    std::string to_json() const;
};

FrobeniusCertificate frobenius_check(const NonclassicalityWitness& w, uint64_t qprime);

/// Tries every s = p^h dividing qprime with s <= deg(f); returns the first
/// certificate with a true verdict, or nullopt when no witness at any s
/// certifies Frobenius nonclassicality over the field of qprime elements.
std::optional<FrobeniusCertificate> frobenius_search(const MultiPoly& f, uint64_t qprime);

/// Rational point count d (q' - d + 2) of a nonsingular Frobenius nonclassical
/// curve of degree d over the field of q' elements.
int64_t hefez_voloch_count(int64_t d, uint64_t qprime);

}  // namespace curvelab
