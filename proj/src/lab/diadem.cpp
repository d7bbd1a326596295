#include "edr/lab/diadem.hpp"

#include "shortening.hpp"

namespace edr {

namespace {

using Index = FiniteRing::Index;

bool comaximal_pair(const Element& a, const Element& b) {
    const Element pair[] = {a, b};
    return is_comaximal(a.ring(), pair);
}

QuotientVerdict quotient_sr1(const Element& w, std::size_t exhaustive_bound) {
    const Ring& R = w.ring();
    if (!R.is_finite() && w.is_zero())
        throw InfiniteRing("infinite quotient: " + R.spec() + " modulo 0 is not finite");
    Ring q = quotient_ring(R, w);
    std::size_t bound = exhaustive_bound;
    if (R.is_finite()) bound = std::max<std::size_t>(bound, R.cardinality()->get_ui());
    return decide_on_finite_ring(q, Property::StableRange1, bound);
}

}  // namespace

std::string_view evidence_name(DiademEvidence e) {
    switch (e) {
        case DiademEvidence::QuotientStableRange1: return "quotient-sr1";
        case DiademEvidence::ExhaustiveDefinition: return "exhaustive-definition";
        case DiademEvidence::TrivialUnit: return "trivial-unit";
    }
    return "unknown";
}

Element search_candidate(const Ring& ring, std::uint64_t k) {
    switch (ring.kind()) {
        case RingKind::Integers: {
            Integer v(static_cast<unsigned long>((k + 1) / 2));
            return ring.from_integer(k % 2 == 1 ? v : Integer(-v));
        }
        case RingKind::PolynomialsOverPrimeField: {
            const std::uint64_t p = ring.prime();
            std::vector<std::uint64_t> digits;
            for (std::uint64_t rest = k; rest > 0; rest /= p) digits.push_back(rest % p);
            return Element(ring, Poly(std::move(digits)));
        }
        default:
            if (!ring.is_finite()) throw UnsupportedRing("no search order on " + ring.spec());
            return ring.element_at(Integer(static_cast<unsigned long>(k)));
    }
}

std::vector<char> direct_diadem_table(const FiniteRing& R) {
    const Index n = static_cast<Index>(R.size());
    const std::size_t k = R.ideal_count();
    const auto sets = detail::shortening_sets(R);
    const auto comax = detail::comaximal_ideals(R);
    std::vector<char> out(n, 1);
    for (Index w = 0; w < n; ++w) {
        const auto iw = R.principal(w);
        for (Index c = 0; c < n && out[w]; ++c) {
            for (Index d = 0; d < n; ++d) {
                if (!R.comaximal(w, c, d)) continue;
                bool found = false;
                for (auto id : sets[c * n + d]) {
                    if (comax[iw * k + id]) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    out[w] = 0;
                    break;
                }
            }
        }
    }
    return out;
}

bool is_diadem_direct(const FiniteRing& R, Index a, Index b, Index lambda) {
    if (!R.comaximal(a, b)) throw PreconditionError("pair not comaximal");
    const Index n = static_cast<Index>(R.size());
    const Index w = R.add(a, R.mul(b, lambda));
    for (Index c = 0; c < n; ++c) {
        for (Index d = 0; d < n; ++d) {
            if (!R.comaximal(w, c, d)) continue;
            bool found = false;
            for (Index m = 0; m < n && !found; ++m) found = R.comaximal(w, R.add(c, R.mul(d, m)));
            if (!found) return false;
        }
    }
    return true;
}

bool is_diadem_direct(const FiniteRing& R, const Element& a, const Element& b, const Element& lambda) {
    return is_diadem_direct(R, R.index(a), R.index(b), R.index(lambda));
}

bool is_diadem_via_quotient(const Element& a, const Element& b, const Element& lambda, const DiademOptions& options) {
    if (!(a.ring() == b.ring()) || !(a.ring() == lambda.ring())) throw RingMismatch();
    if (!comaximal_pair(a, b)) throw PreconditionError("pair not comaximal");
    return quotient_sr1(a + b * lambda, options.exhaustive_bound).holds;
}

DiademWitness find_diadem(const Element& a, const Element& b, const DiademOptions& options) {
    const Ring& R = a.ring();
    if (!(b.ring() == R)) throw RingMismatch();

    if (R.is_finite()) {
        const FiniteRing fr(R, options.max_cardinality);
        const Index ia = fr.index(a), ib = fr.index(b);
        if (!fr.comaximal(ia, ib)) throw PreconditionError("pair not comaximal");
        const auto table = direct_diadem_table(fr);
        for (Index l = 0; l < fr.size(); ++l) {
            const Index w = fr.add(ia, fr.mul(ib, l));
            if (!table[w]) continue;
            return {a, b, fr.element(l), fr.element(w),
                    fr.is_unit(w) ? DiademEvidence::TrivialUnit : DiademEvidence::ExhaustiveDefinition, true};
        }
        throw Error("pair (" + a.to_string() + ", " + b.to_string() + ") has no diadem in " + R.spec());
    }

    if (!comaximal_pair(a, b)) throw PreconditionError("pair not comaximal");
    if (auto binv = inverse(b)) {
        // trivial pair (a, u): a + (1 - a*u^-1)*u = u
        Element lambda = R.one() - a * *binv;
        return {a, b, lambda, a + b * lambda, DiademEvidence::TrivialUnit, true};
    }
    for (std::uint64_t k = 0; k < options.search_radius; ++k) {
        Element lambda = search_candidate(R, k);
        Element w = a + b * lambda;
        if (w.is_zero()) continue;
        auto verdict = quotient_sr1(w, options.exhaustive_bound);
        if (!verdict.holds) continue;
        return {a, b, lambda, w, is_unit(w) ? DiademEvidence::TrivialUnit : DiademEvidence::QuotientStableRange1,
                verdict.exhaustive};
    }
    throw Error("diadem search exhausted after " + std::to_string(options.search_radius) + " candidates");
}

PropertyReport verify_associate_diadems(const FiniteRing& R) {
    if (!check_dyadic_range_1(R).holds) throw PreconditionError(R.spec() + " is not of dyadic range 1");
    PropertyReport report{Property::AssociateDiadems, R.spec(), true, std::nullopt, 0};
    // every w is the diadem w + 1*0 of the comaximal pair (w, 1) when it is
    // a diadem at all
    const auto diadem = direct_diadem_table(R);
    const Index n = static_cast<Index>(R.size());
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            ++report.checked;
            if (R.principal(a) != R.principal(b)) continue;
            bool d1 = false, d2 = false;
            for (Index d = 0; d < n && !(d1 && d2); ++d) {
                if (!diadem[d]) continue;
                d1 = d1 || R.mul(a, d) == b;
                d2 = d2 || R.mul(b, d) == a;
            }
            if (!(d1 && d2)) {
                report.holds = false;
                report.counterexample = std::vector<LabeledElement>{{"a", a, R.label(a)}, {"b", b, R.label(b)}};
                return report;
            }
        }
    }
    return report;
}

}  // namespace edr
