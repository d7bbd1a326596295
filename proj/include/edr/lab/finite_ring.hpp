#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edr/core/ring.hpp"

namespace edr {

/// Operation tables of a finite commutative ring, elements addressed by
/// their canonical index. Every ideal generated by finitely many elements
/// is interned at construction, so comaximality tests are table lookups.
///
/// Built once per ring and immutable afterwards; the checkers in
/// properties.hpp take it by const reference.
class FiniteRing {
public:
    using Index = std::uint32_t;
    using IdealId = std::uint32_t;

    static constexpr std::size_t kDefaultLimit = 1024;

    explicit FiniteRing(const Ring& ring, std::size_t max_cardinality = kDefaultLimit);

    /// Ring given directly by Cayley tables, for carriers outside the
    /// structural kinds. Checks the commutative ring axioms and throws
    /// PreconditionError when they fail.
    static FiniteRing from_tables(std::string name, std::vector<std::vector<Index>> add,
                                  std::vector<std::vector<Index>> mul, std::vector<std::string> labels);

    std::size_t size() const { return n_; }
    const std::string& spec() const { return name_; }
    const std::optional<Ring>& ring() const { return ring_; }

    Index add(Index a, Index b) const { return add_[a * n_ + b]; }
    Index mul(Index a, Index b) const { return mul_[a * n_ + b]; }
    Index neg(Index a) const { return neg_[a]; }
    Index sub(Index a, Index b) const { return add(a, neg(b)); }
    Index zero() const { return zero_; }
    Index one() const { return one_; }

    bool is_unit(Index a) const { return unit_[a] != 0; }
    bool is_idempotent(Index a) const { return mul(a, a) == a; }
    const std::vector<Index>& idempotents() const { return idempotents_; }

    const std::string& label(Index a) const { return labels_[a]; }
    Element element(Index a) const;
    Index index(const Element& x) const;

    IdealId principal(Index a) const { return principal_[a]; }
    IdealId sum(IdealId i, IdealId j) const { return sum_[i * ideals_.size() + j]; }
    IdealId whole() const { return whole_; }
    std::size_t ideal_count() const { return ideals_.size(); }
    bool contains(IdealId i, Index x) const { return ideals_[i][x] != 0; }
    std::vector<Index> members(IdealId i) const;

    bool comaximal(Index a, Index b) const { return sum(principal(a), principal(b)) == whole_; }
    bool comaximal(Index a, Index b, Index c) const {
        return sum(sum(principal(a), principal(b)), principal(c)) == whole_;
    }

private:
    FiniteRing() = default;
    void finish();
    IdealId intern(std::vector<char> members);

    std::string name_;
    std::optional<Ring> ring_;
    std::size_t n_ = 0;
    std::vector<Index> add_, mul_, neg_;
    Index zero_ = 0, one_ = 0;
    std::vector<char> unit_;
    std::vector<Index> idempotents_;
    std::vector<std::string> labels_;

    std::vector<std::vector<char>> ideals_;
    std::vector<IdealId> principal_;
    std::vector<IdealId> sum_;
    IdealId whole_ = 0;
};

/// The ideal g1*R + ... + gk*R as a set, canonical order; {0} for no
/// generators.
std::vector<Element> ideal_generated(const Ring& ring, std::span<const Element> generators);

/// True iff the elements generate the unit ideal. Finite rings decide by
/// closure; Z and GF(p)[x] by the gcd being a unit.
bool is_comaximal(const Ring& ring, std::span<const Element> elems);

}  // namespace edr
