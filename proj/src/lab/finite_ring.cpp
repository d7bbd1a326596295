#include "edr/lab/finite_ring.hpp"

#include <map>

namespace edr {

FiniteRing::FiniteRing(const Ring& ring, std::size_t max_cardinality) : name_(ring.spec()), ring_(ring) {
    const auto elems = ring.elements(max_cardinality);
    n_ = elems.size();
    auto idx = [&](const Element& e) { return static_cast<Index>(ring.index_of(e).get_ui()); };
    add_.resize(n_ * n_);
    mul_.resize(n_ * n_);
    for (std::size_t a = 0; a < n_; ++a) {
        for (std::size_t b = a; b < n_; ++b) {
            add_[a * n_ + b] = add_[b * n_ + a] = idx(elems[a] + elems[b]);
            mul_[a * n_ + b] = mul_[b * n_ + a] = idx(elems[a] * elems[b]);
        }
    }
    zero_ = idx(ring.zero());
    one_ = idx(ring.one());
    labels_.reserve(n_);
    for (const auto& e : elems) labels_.push_back(e.to_string());
    finish();
}

FiniteRing FiniteRing::from_tables(std::string name, std::vector<std::vector<Index>> add,
                                   std::vector<std::vector<Index>> mul, std::vector<std::string> labels) {
    FiniteRing fr;
    fr.name_ = std::move(name);
    fr.n_ = add.size();
    const std::size_t n = fr.n_;
    if (n == 0 || mul.size() != n || labels.size() != n) throw PreconditionError("table sizes disagree");
    fr.add_.resize(n * n);
    fr.mul_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        if (add[a].size() != n || mul[a].size() != n) throw PreconditionError("tables must be square");
        for (std::size_t b = 0; b < n; ++b) {
            if (add[a][b] >= n || mul[a][b] >= n) throw PreconditionError("table entry out of range");
            fr.add_[a * n + b] = add[a][b];
            fr.mul_[a * n + b] = mul[a][b];
        }
    }
    fr.labels_ = std::move(labels);

    auto find_identity = [&](const std::vector<Index>& table) -> std::optional<Index> {
        for (Index e = 0; e < n; ++e) {
            bool ok = true;
            for (Index x = 0; x < n && ok; ++x) ok = table[e * n + x] == x && table[x * n + e] == x;
            if (ok) return e;
        }
        return std::nullopt;
    };
    auto z = find_identity(fr.add_);
    auto o = find_identity(fr.mul_);
    if (!z || !o) throw PreconditionError("tables lack an additive or multiplicative identity");
    fr.zero_ = *z;
    fr.one_ = *o;
    for (Index a = 0; a < n; ++a) {
        bool has_neg = false;
        for (Index b = 0; b < n; ++b) {
            if (fr.add(a, b) != fr.add(b, a) || fr.mul(a, b) != fr.mul(b, a))
                throw PreconditionError("tables are not commutative");
            has_neg = has_neg || fr.add(a, b) == fr.zero_;
            for (Index c = 0; c < n; ++c) {
                if (fr.add(fr.add(a, b), c) != fr.add(a, fr.add(b, c)) ||
                    fr.mul(fr.mul(a, b), c) != fr.mul(a, fr.mul(b, c)) ||
                    fr.mul(a, fr.add(b, c)) != fr.add(fr.mul(a, b), fr.mul(a, c)))
                    throw PreconditionError("tables violate the ring axioms");
            }
        }
        if (!has_neg) throw PreconditionError("tables lack additive inverses");
    }
    fr.finish();
    return fr;
}

void FiniteRing::finish() {
    neg_.resize(n_);
    unit_.assign(n_, 0);
    for (Index a = 0; a < n_; ++a) {
        for (Index b = 0; b < n_; ++b) {
            if (add(a, b) == zero_) neg_[a] = b;
            if (mul(a, b) == one_) unit_[a] = 1;
        }
        if (is_idempotent(a)) idempotents_.push_back(a);
    }

    principal_.resize(n_);
    for (Index a = 0; a < n_; ++a) {
        std::vector<char> m(n_, 0);
        for (Index r = 0; r < n_; ++r) m[mul(a, r)] = 1;
        principal_[a] = intern(std::move(m));
    }

    // Close the interned family under sums. Every finitely generated ideal
    // is a sum of principal ones, so this reaches all of them.
    std::vector<std::vector<IdealId>> table;
    for (std::size_t done = 0; done < ideals_.size();) {
        const std::size_t upto = ideals_.size();
        for (IdealId i = 0; i < upto; ++i) {
            for (IdealId j = (i < done ? static_cast<IdealId>(done) : i); j < upto; ++j) {
                auto mi = members(i);
                auto mj = members(j);
                std::vector<char> s(n_, 0);
                for (Index x : mi)
                    for (Index y : mj) s[add(x, y)] = 1;
                intern(std::move(s));
            }
        }
        done = upto;
    }

    const std::size_t k = ideals_.size();
    std::map<std::vector<char>, IdealId> lookup;
    for (IdealId i = 0; i < k; ++i) lookup.emplace(ideals_[i], i);
    sum_.resize(k * k);
    for (IdealId i = 0; i < k; ++i) {
        auto mi = members(i);
        for (IdealId j = i; j < k; ++j) {
            auto mj = members(j);
            std::vector<char> s(n_, 0);
            for (Index x : mi)
                for (Index y : mj) s[add(x, y)] = 1;
            sum_[i * k + j] = sum_[j * k + i] = lookup.at(s);
        }
    }
    whole_ = principal_[one_];
}

FiniteRing::IdealId FiniteRing::intern(std::vector<char> m) {
    for (IdealId i = 0; i < ideals_.size(); ++i)
        if (ideals_[i] == m) return i;
    ideals_.push_back(std::move(m));
    return static_cast<IdealId>(ideals_.size() - 1);
}

std::vector<FiniteRing::Index> FiniteRing::members(IdealId i) const {
    std::vector<Index> out;
    for (Index x = 0; x < n_; ++x)
        if (ideals_[i][x]) out.push_back(x);
    return out;
}

Element FiniteRing::element(Index a) const {
    if (!ring_) throw UnsupportedRing(name_ + " is given by tables and has no structural elements");
    return ring_->element_at(Integer(static_cast<unsigned long>(a)));
}

FiniteRing::Index FiniteRing::index(const Element& x) const {
    if (!ring_) throw UnsupportedRing(name_ + " is given by tables and has no structural elements");
    return static_cast<Index>(ring_->index_of(x).get_ui());
}

std::vector<Element> ideal_generated(const Ring& ring, std::span<const Element> generators) {
    if (!ring.is_finite()) throw InfiniteRing("ideal_generated requires a finite ring, got " + ring.spec());
    const auto elems = ring.elements();
    const std::size_t n = elems.size();
    auto idx = [&](const Element& e) { return ring.index_of(e).get_ui(); };
    std::vector<char> in(n, 0);
    in[idx(ring.zero())] = 1;
    for (const auto& g : generators) {
        if (!(g.ring() == ring)) throw RingMismatch();
        std::vector<char> next(n, 0);
        for (std::size_t x = 0; x < n; ++x) {
            if (!in[x]) continue;
            for (const auto& r : elems) next[idx(elems[x] + g * r)] = 1;
        }
        in = std::move(next);
    }
    std::vector<Element> out;
    for (std::size_t x = 0; x < n; ++x)
        if (in[x]) out.push_back(elems[x]);
    return out;
}

bool is_comaximal(const Ring& ring, std::span<const Element> elems) {
    if (ring.is_finite()) {
        auto ideal = ideal_generated(ring, elems);
        return ideal.size() == ring.cardinality()->get_ui();
    }
    switch (ring.kind()) {
        case RingKind::Integers:
        case RingKind::PolynomialsOverPrimeField: {
            Element g = ring.zero();
            for (const auto& e : elems) {
                if (!(e.ring() == ring)) throw RingMismatch();
                g = bezout_gcd(g, e).g;
            }
            return is_unit(g);
        }
        default:
            throw UnsupportedRing("is_comaximal is not decidable on " + ring.spec());
    }
}

}  // namespace edr
