#include "edr/lab/properties.hpp"

#include <array>

#include "edr/lab/diadem.hpp"
#include "shortening.hpp"

namespace edr {

namespace {

using Index = FiniteRing::Index;

constexpr std::array<std::pair<Property, std::string_view>, 9> kNames{{
    {Property::StableRange1, "stable-range-1"},
    {Property::StableRange2, "stable-range-2"},
    {Property::IdempotentStableRange1, "idempotent-stable-range-1"},
    {Property::Clean, "clean"},
    {Property::Exchange, "exchange"},
    {Property::Gelfand, "gelfand"},
    {Property::Hermite, "hermite"},
    {Property::DyadicRange1, "dyadic-range-1"},
    {Property::AssociateDiadems, "associate-diadems"},
}};

class Reporter {
public:
    Reporter(const FiniteRing& R, Property p) : R_(R) {
        report_.property = p;
        report_.ring = R.spec();
    }

    void visit() { ++report_.checked; }

    void fail(std::initializer_list<std::pair<const char*, Index>> tuple) {
        report_.holds = false;
        std::vector<LabeledElement> ce;
        for (const auto& [role, idx] : tuple) ce.push_back({role, idx, R_.label(idx)});
        report_.counterexample = std::move(ce);
    }

    PropertyReport done() { return std::move(report_); }

private:
    const FiniteRing& R_;
    PropertyReport report_;
};

}  // namespace

const std::vector<Property>& all_properties() {
    static const std::vector<Property> props{
        Property::StableRange1, Property::StableRange2, Property::IdempotentStableRange1, Property::Clean,
        Property::Exchange,     Property::Gelfand,      Property::Hermite,                Property::DyadicRange1,
    };
    return props;
}

std::string_view property_name(Property p) {
    for (const auto& [prop, name] : kNames)
        if (prop == p) return name;
    return "unknown";
}

std::optional<Property> parse_property(std::string_view name) {
    for (const auto& [prop, n] : kNames)
        if (n == name) return prop;
    return std::nullopt;
}

bool is_triple_quantifier(Property p) {
    return p == Property::StableRange2 || p == Property::Hermite || p == Property::DyadicRange1 ||
           p == Property::AssociateDiadems;
}

std::string serialize(const PropertyReport& report) {
    std::string out = "property=" + std::string(property_name(report.property)) + " ring=" + report.ring +
                      " holds=" + (report.holds ? "true" : "false");
    if (report.counterexample) {
        out += " counterexample=(";
        for (std::size_t i = 0; i < report.counterexample->size(); ++i) {
            const auto& e = (*report.counterexample)[i];
            if (i) out += ",";
            out += e.role + "=" + e.text;
        }
        out += ")";
    }
    out += " checked=" + std::to_string(report.checked);
    return out;
}

PropertyReport check_stable_range_1(const FiniteRing& R) {
    Reporter rep(R, Property::StableRange1);
    const Index n = static_cast<Index>(R.size());
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            rep.visit();
            if (!R.comaximal(a, b)) continue;
            bool found = false;
            for (Index l = 0; l < n && !found; ++l) found = R.is_unit(R.add(a, R.mul(b, l)));
            if (!found) {
                rep.fail({{"a", a}, {"b", b}});
                return rep.done();
            }
        }
    }
    return rep.done();
}

PropertyReport check_stable_range_2(const FiniteRing& R) {
    Reporter rep(R, Property::StableRange2);
    const Index n = static_cast<Index>(R.size());
    const std::size_t k = R.ideal_count();
    const auto sets = detail::shortening_sets(R);
    const auto comax = detail::comaximal_ideals(R);
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            for (Index c = 0; c < n; ++c) {
                rep.visit();
                if (!R.comaximal(a, b, c)) continue;
                // some (a + c*l)R + (b + c*m)R = R
                bool found = false;
                for (auto i : sets[a * n + c]) {
                    for (auto j : sets[b * n + c]) {
                        if (comax[i * k + j]) {
                            found = true;
                            break;
                        }
                    }
                    if (found) break;
                }
                if (!found) {
                    rep.fail({{"a", a}, {"b", b}, {"c", c}});
                    return rep.done();
                }
            }
        }
    }
    return rep.done();
}

PropertyReport check_idempotent_stable_range_1(const FiniteRing& R) {
    Reporter rep(R, Property::IdempotentStableRange1);
    const Index n = static_cast<Index>(R.size());
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            rep.visit();
            if (!R.comaximal(a, b)) continue;
            bool found = false;
            for (Index e : R.idempotents()) {
                if (R.is_unit(R.add(a, R.mul(b, e)))) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                rep.fail({{"a", a}, {"b", b}});
                return rep.done();
            }
        }
    }
    return rep.done();
}

PropertyReport check_clean(const FiniteRing& R) {
    Reporter rep(R, Property::Clean);
    const Index n = static_cast<Index>(R.size());
    for (Index x = 0; x < n; ++x) {
        rep.visit();
        bool found = false;
        for (Index e : R.idempotents()) {
            if (R.is_unit(R.sub(x, e))) {
                found = true;
                break;
            }
        }
        if (!found) {
            rep.fail({{"x", x}});
            return rep.done();
        }
    }
    return rep.done();
}

PropertyReport check_exchange(const FiniteRing& R) {
    Reporter rep(R, Property::Exchange);
    const Index n = static_cast<Index>(R.size());
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            rep.visit();
            if (!R.comaximal(a, b)) continue;
            bool found = false;
            for (Index e : R.idempotents()) {
                if (R.contains(R.principal(a), e) && R.contains(R.principal(b), R.sub(R.one(), e))) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                rep.fail({{"a", a}, {"b", b}});
                return rep.done();
            }
        }
    }
    return rep.done();
}

PropertyReport check_gelfand(const FiniteRing& R) {
    Reporter rep(R, Property::Gelfand);
    const Index n = static_cast<Index>(R.size());
    std::vector<char> in_y(n);
    for (Index a = 0; a < n; ++a) {
        const Index b = R.sub(R.one(), a);
        rep.visit();
        std::vector<Index> xs;
        std::fill(in_y.begin(), in_y.end(), 0);
        std::vector<Index> ys;
        for (Index t = 0; t < n; ++t) {
            xs.push_back(R.add(R.one(), R.mul(a, t)));
            Index y = R.add(R.one(), R.mul(b, t));
            if (!in_y[y]) {
                in_y[y] = 1;
                ys.push_back(y);
            }
        }
        bool found = false;
        for (Index x : xs) {
            for (Index y : ys) {
                if (R.mul(x, y) == R.zero()) {
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) {
            rep.fail({{"a", a}, {"b", b}});
            return rep.done();
        }
    }
    return rep.done();
}

PropertyReport check_hermite(const FiniteRing& R) {
    // (a, b)Q = (g, 0) with Q invertible iff (a, b) = g*(s, t) for the first
    // row (s, t) of Q^-1, and the first rows of invertible 2x2 matrices are
    // exactly the comaximal pairs.
    Reporter rep(R, Property::Hermite);
    const Index n = static_cast<Index>(R.size());
    std::vector<char> reachable(static_cast<std::size_t>(n) * n, 0);
    for (Index s = 0; s < n; ++s) {
        for (Index t = 0; t < n; ++t) {
            if (!R.comaximal(s, t)) continue;
            for (Index g = 0; g < n; ++g) reachable[R.mul(g, s) * n + R.mul(g, t)] = 1;
        }
    }
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            rep.visit();
            if (!reachable[a * n + b]) {
                rep.fail({{"a", a}, {"b", b}});
                return rep.done();
            }
        }
    }
    return rep.done();
}

PropertyReport check_dyadic_range_1(const FiniteRing& R) {
    Reporter rep(R, Property::DyadicRange1);
    const Index n = static_cast<Index>(R.size());
    const auto diadem = direct_diadem_table(R);
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            rep.visit();
            if (!R.comaximal(a, b)) continue;
            bool found = false;
            for (Index l = 0; l < n && !found; ++l) found = diadem[R.add(a, R.mul(b, l))] != 0;
            if (!found) {
                rep.fail({{"a", a}, {"b", b}});
                return rep.done();
            }
        }
    }
    return rep.done();
}

PropertyReport check_property(const FiniteRing& R, Property p) {
    switch (p) {
        case Property::StableRange1: return check_stable_range_1(R);
        case Property::StableRange2: return check_stable_range_2(R);
        case Property::IdempotentStableRange1: return check_idempotent_stable_range_1(R);
        case Property::Clean: return check_clean(R);
        case Property::Exchange: return check_exchange(R);
        case Property::Gelfand: return check_gelfand(R);
        case Property::Hermite: return check_hermite(R);
        case Property::DyadicRange1: return check_dyadic_range_1(R);
        case Property::AssociateDiadems: return verify_associate_diadems(R);
    }
    throw Error("unknown property");
}

std::vector<PropertyReport> check_all(const FiniteRing& R) {
    std::vector<PropertyReport> out;
    for (Property p : all_properties()) out.push_back(check_property(R, p));
    return out;
}

PropertyReport check_property(const Ring& ring, Property p, const CardinalityBounds& bounds) {
    auto card = ring.cardinality();
    if (!card) throw InfiniteRing("property checks require a finite ring, got " + ring.spec());
    const std::size_t bound = bounds.for_property(p);
    if (*card > static_cast<unsigned long>(bound))
        throw PreconditionError(ring.spec() + " has " + card->get_str() + " elements; the bound for " +
                                std::string(property_name(p)) + " is " + std::to_string(bound));
    return check_property(FiniteRing(ring, bound), p);
}

// ---- counterexample replay --------------------------------------------------

namespace {

/// Brute-force predicates straight from the definitions, over the raw tables.
class Raw {
public:
    explicit Raw(const FiniteRing& R) : R(R), n(static_cast<Index>(R.size())) {}

    bool unit(Index x) const {
        for (Index y = 0; y < n; ++y)
            if (R.mul(x, y) == R.one()) return true;
        return false;
    }

    bool in_principal(Index a, Index x) const {
        for (Index r = 0; r < n; ++r)
            if (R.mul(a, r) == x) return true;
        return false;
    }

    bool comax(Index a, Index b) const {
        for (Index r = 0; r < n; ++r)
            for (Index s = 0; s < n; ++s)
                if (R.add(R.mul(a, r), R.mul(b, s)) == R.one()) return true;
        return false;
    }

    bool comax(Index a, Index b, Index c) const {
        for (Index r = 0; r < n; ++r)
            for (Index s = 0; s < n; ++s)
                for (Index t = 0; t < n; ++t)
                    if (R.add(R.add(R.mul(a, r), R.mul(b, s)), R.mul(c, t)) == R.one()) return true;
        return false;
    }

    bool diadem(Index w) const {
        for (Index c = 0; c < n; ++c) {
            for (Index d = 0; d < n; ++d) {
                if (!comax(w, c, d)) continue;
                bool found = false;
                for (Index m = 0; m < n && !found; ++m) found = comax(w, R.add(c, R.mul(d, m)));
                if (!found) return false;
            }
        }
        return true;
    }

    const FiniteRing& R;
    const Index n;
};

}  // namespace

bool replay_counterexample(const FiniteRing& R, const PropertyReport& report) {
    if (!report.counterexample) return false;
    const auto& ce = *report.counterexample;
    const Raw raw(R);
    const Index n = raw.n;
    auto at = [&](std::size_t i) { return ce.at(i).index; };
    auto idempotent = [&](Index e) { return R.mul(e, e) == e; };

    switch (report.property) {
        case Property::StableRange1: {
            Index a = at(0), b = at(1);
            if (!raw.comax(a, b)) return false;
            for (Index l = 0; l < n; ++l)
                if (raw.unit(R.add(a, R.mul(b, l)))) return false;
            return true;
        }
        case Property::StableRange2: {
            Index a = at(0), b = at(1), c = at(2);
            if (!raw.comax(a, b, c)) return false;
            for (Index l = 0; l < n; ++l)
                for (Index m = 0; m < n; ++m)
                    if (raw.comax(R.add(a, R.mul(c, l)), R.add(b, R.mul(c, m)))) return false;
            return true;
        }
        case Property::IdempotentStableRange1: {
            Index a = at(0), b = at(1);
            if (!raw.comax(a, b)) return false;
            for (Index e = 0; e < n; ++e)
                if (idempotent(e) && raw.unit(R.add(a, R.mul(b, e)))) return false;
            return true;
        }
        case Property::Clean: {
            Index x = at(0);
            for (Index e = 0; e < n; ++e)
                if (idempotent(e) && raw.unit(R.sub(x, e))) return false;
            return true;
        }
        case Property::Exchange: {
            Index a = at(0), b = at(1);
            if (!raw.comax(a, b)) return false;
            for (Index e = 0; e < n; ++e)
                if (idempotent(e) && raw.in_principal(a, e) && raw.in_principal(b, R.sub(R.one(), e)))
                    return false;
            return true;
        }
        case Property::Gelfand: {
            Index a = at(0), b = at(1);
            if (R.add(a, b) != R.one()) return false;
            for (Index x = 0; x < n; ++x)
                for (Index y = 0; y < n; ++y)
                    if (R.mul(R.add(R.one(), R.mul(a, x)), R.add(R.one(), R.mul(b, y))) == R.zero()) return false;
            return true;
        }
        case Property::Hermite: {
            Index a = at(0), b = at(1);
            for (Index q00 = 0; q00 < n; ++q00)
                for (Index q01 = 0; q01 < n; ++q01)
                    for (Index q10 = 0; q10 < n; ++q10)
                        for (Index q11 = 0; q11 < n; ++q11) {
                            if (R.add(R.mul(a, q01), R.mul(b, q11)) != R.zero()) continue;
                            if (raw.unit(R.sub(R.mul(q00, q11), R.mul(q01, q10)))) return false;
                        }
            return true;
        }
        case Property::DyadicRange1: {
            Index a = at(0), b = at(1);
            if (!raw.comax(a, b)) return false;
            for (Index l = 0; l < n; ++l)
                if (raw.diadem(R.add(a, R.mul(b, l)))) return false;
            return true;
        }
        case Property::AssociateDiadems: {
            Index a = at(0), b = at(1);
            for (Index x = 0; x < n; ++x)
                if (raw.in_principal(a, x) != raw.in_principal(b, x)) return false;
            bool d1 = false, d2 = false;
            for (Index d = 0; d < n; ++d) {
                if (!raw.diadem(d)) continue;
                d1 = d1 || R.mul(a, d) == b;
                d2 = d2 || R.mul(b, d) == a;
            }
            return !(d1 && d2);
        }
    }
    return false;
}

QuotientVerdict decide_on_finite_ring(const Ring& ring, Property p, std::size_t exhaustive_bound) {
    auto card = ring.cardinality();
    if (!card) throw InfiniteRing("infinite quotient " + ring.spec());
    if (*card <= static_cast<unsigned long>(exhaustive_bound))
        return {check_property(FiniteRing(ring, exhaustive_bound), p).holds, true};
    return {true, false};
}

}  // namespace edr
