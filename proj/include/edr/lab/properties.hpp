#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edr/lab/finite_ring.hpp"

namespace edr {

enum class Property {
    StableRange1,
    StableRange2,
    IdempotentStableRange1,
    Clean,
    Exchange,
    Gelfand,
    Hermite,
    DyadicRange1,
    AssociateDiadems,
};

/// The eight ring properties, in report order (AssociateDiadems excluded).
const std::vector<Property>& all_properties();

/// Kebab-case names: "stable-range-1", "dyadic-range-1", ...
std::string_view property_name(Property p);
std::optional<Property> parse_property(std::string_view name);

/// Properties whose checks cost |R|^3 or more; these get the tighter bound.
bool is_triple_quantifier(Property p);

struct LabeledElement {
    std::string role;
    FiniteRing::Index index;
    std::string text;
};

/// Outcome of an exhaustive check. When `holds` is false the counterexample
/// is the least failing tuple in enumeration order. `checked` counts outer
/// quantifier instances visited, which is the whole domain when `holds`.
struct PropertyReport {
    Property property;
    std::string ring;
    bool holds = true;
    std::optional<std::vector<LabeledElement>> counterexample;
    std::uint64_t checked = 0;
};

/// `property=<name> ring=<spec> holds=<bool> [counterexample=(r=x,...)] checked=<n>`
std::string serialize(const PropertyReport& report);

PropertyReport check_stable_range_1(const FiniteRing& R);
PropertyReport check_stable_range_2(const FiniteRing& R);
PropertyReport check_idempotent_stable_range_1(const FiniteRing& R);
PropertyReport check_clean(const FiniteRing& R);
PropertyReport check_exchange(const FiniteRing& R);
PropertyReport check_gelfand(const FiniteRing& R);
PropertyReport check_hermite(const FiniteRing& R);
PropertyReport check_dyadic_range_1(const FiniteRing& R);

PropertyReport check_property(const FiniteRing& R, Property p);
std::vector<PropertyReport> check_all(const FiniteRing& R);

struct CardinalityBounds {
    std::size_t pair = 50;
    std::size_t triple = 16;
    std::size_t for_property(Property p) const { return is_triple_quantifier(p) ? triple : pair; }
};

/// Builds the tables and runs the check. Throws InfiniteRing for infinite
/// rings and PreconditionError when the cardinality exceeds the bound.
PropertyReport check_property(const Ring& ring, Property p, const CardinalityBounds& bounds = {});

/// Plugs the report's counterexample into the property's defining formula
/// by brute force over the raw tables (no interned ideals) and returns true
/// iff the formula indeed fails there.
bool replay_counterexample(const FiniteRing& R, const PropertyReport& report);

/// Verdict of a property on a finite quotient of Z or GF(p)[x]: exhaustive
/// below `exhaustive_bound`, otherwise taken from finiteness, which is only
/// sound for properties every finite commutative ring has (all of the above).
struct QuotientVerdict {
    bool holds;
    bool exhaustive;
};
QuotientVerdict decide_on_finite_ring(const Ring& ring, Property p, std::size_t exhaustive_bound);

}  // namespace edr
