#pragma once

#include <cstdint>
#include <vector>

#include "edr/lab/properties.hpp"

namespace edr {

enum class DiademEvidence {
    QuotientStableRange1,  // R/(a + b*lambda) has stable range 1
    ExhaustiveDefinition,  // definition checked over every (c, d) of a finite ring
    TrivialUnit,           // a + b*lambda is a unit
};

std::string_view evidence_name(DiademEvidence e);

struct DiademWitness {
    Element a, b, lambda;
    Element diadem;  // a + b*lambda
    DiademEvidence evidence;
    /// False when the quotient was too large to enumerate and stable range 1
    /// was concluded from finiteness alone.
    bool exhaustive = true;
};

struct DiademOptions {
    /// Largest quotient cardinality checked element by element.
    std::size_t exhaustive_bound = 64;
    /// Number of lambda candidates tried before giving up.
    std::uint64_t search_radius = 1'000'000;
    /// Largest finite carrier tabulated for the direct definition.
    std::size_t max_cardinality = FiniteRing::kDefaultLimit;
};

/// k-th candidate in the deterministic search order: 0, 1, -1, 2, -2, ... on
/// Z; base-p digit polynomials 0, 1, ..., p-1, x, x+1, ... on GF(p)[x];
/// canonical element order on finite rings.
Element search_candidate(const Ring& ring, std::uint64_t k);

/// One row per element w: for every (c, d) with wR + cR + dR = R there is a
/// mu with wR + (c + d*mu)R = R.
std::vector<char> direct_diadem_table(const FiniteRing& R);

/// The definition itself, quantified over all (c, d, mu) of a finite ring.
/// Throws PreconditionError when (a, b) is not comaximal.
bool is_diadem_direct(const FiniteRing& R, FiniteRing::Index a, FiniteRing::Index b, FiniteRing::Index lambda);
bool is_diadem_direct(const FiniteRing& R, const Element& a, const Element& b, const Element& lambda);

/// R/(a + b*lambda) has stable range 1. Finite rings, and Z or GF(p)[x] when
/// a + b*lambda is nonzero (InfiniteRing otherwise).
bool is_diadem_via_quotient(const Element& a, const Element& b, const Element& lambda,
                            const DiademOptions& options = {});

/// First lambda in search order whose a + b*lambda is a diadem. On Z and
/// GF(p)[x] a unit b short-circuits to lambda = 1 - a/b, giving the trivial
/// diadem b.
DiademWitness find_diadem(const Element& a, const Element& b, const DiademOptions& options = {});

/// For every (a, b) with aR = bR there are diadems d1, d2 with a*d1 = b and
/// b*d2 = a. Requires dyadic range 1 (PreconditionError otherwise).
PropertyReport verify_associate_diadems(const FiniteRing& R);

struct CoprimeSplitting {
    Integer c, r, s;
};

/// c = r*s with gcd(r, s) = gcd(r, a) = gcd(s, b) = 1, r the least positive
/// divisor of |c| that works. Requires c != 0 and gcd(a, b, c) = 1.
CoprimeSplitting find_coprime_splitting(const Integer& c, const Integer& a, const Integer& b);

class SplittingNotFound : public Error {
public:
    SplittingNotFound(const std::string& what, std::vector<Integer> tried)
        : Error(what), tried_(std::move(tried)) {}
    const std::vector<Integer>& tried() const { return tried_; }

private:
    std::vector<Integer> tried_;
};

}  // namespace edr
