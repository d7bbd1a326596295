#include "ring_impl.hpp"

#include <algorithm>

#include "parse_util.hpp"

namespace edr::detail {

namespace {

const Integer& as_int(const Payload& p) { return std::get<Integer>(p); }
const Poly& as_poly(const Payload& p) { return std::get<Poly>(p); }
const Components& as_parts(const Payload& p) { return std::get<Components>(p); }

Payload pair_payload(Payload l, Payload r) {
    Components c;
    c.parts.reserve(2);
    c.parts.push_back(std::move(l));
    c.parts.push_back(std::move(r));
    return c;
}

std::size_t to_size(const Integer& v) { return static_cast<std::size_t>(v.get_ui()); }

}  // namespace

Payload RingImpl::element_at(const Integer&) const {
    throw InfiniteRing("element enumeration requires a finite ring, got " + spec());
}

Integer RingImpl::index_of(const Payload&) const {
    throw InfiniteRing("element enumeration requires a finite ring, got " + spec());
}

// ---- Z ----------------------------------------------------------------------

Payload IntegersImpl::add(const Payload& a, const Payload& b) const { return Integer(as_int(a) + as_int(b)); }
Payload IntegersImpl::mul(const Payload& a, const Payload& b) const { return Integer(as_int(a) * as_int(b)); }
Payload IntegersImpl::neg(const Payload& a) const { return Integer(-as_int(a)); }

bool IntegersImpl::is_unit(const Payload& a) const { return abs(as_int(a)) == 1; }

std::optional<Payload> IntegersImpl::divide(const Payload& a, const Payload& b) const {
    const Integer& x = as_int(a);
    const Integer& y = as_int(b);
    if (x == 0) {
        if (y == 0) return Payload(Integer(0));
        return std::nullopt;
    }
    if (!mpz_divisible_p(y.get_mpz_t(), x.get_mpz_t())) return std::nullopt;
    Integer q;
    mpz_divexact(q.get_mpz_t(), y.get_mpz_t(), x.get_mpz_t());
    return Payload(q);
}

Payload IntegersImpl::parse(std::string_view text, std::size_t offset) const {
    return parse_signed_integer(text, offset);
}

std::string IntegersImpl::format(const Payload& a) const { return as_int(a).get_str(); }

// ---- Z/n --------------------------------------------------------------------

Integer ModNImpl::reduce(const Integer& v) const {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), n_.get_mpz_t());
    return r;
}

Payload ModNImpl::add(const Payload& a, const Payload& b) const { return reduce(as_int(a) + as_int(b)); }
Payload ModNImpl::mul(const Payload& a, const Payload& b) const { return reduce(as_int(a) * as_int(b)); }
Payload ModNImpl::neg(const Payload& a) const { return reduce(-as_int(a)); }

bool ModNImpl::is_unit(const Payload& a) const {
    Integer g;
    mpz_gcd(g.get_mpz_t(), as_int(a).get_mpz_t(), n_.get_mpz_t());
    return g == 1;
}

std::optional<Payload> ModNImpl::divide(const Payload& a, const Payload& b) const {
    // a*q = b (mod n) is solvable iff g = gcd(a, n) divides b; the solutions
    // form one residue class modulo n/g, whose least member is returned.
    const Integer& x = as_int(a);
    const Integer& y = as_int(b);
    Integer g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), n_.get_mpz_t());
    if (!mpz_divisible_p(y.get_mpz_t(), g.get_mpz_t())) return std::nullopt;
    Integer m = n_ / g;
    if (m == 1) return Payload(Integer(0));
    Integer xr = x / g, yr = y / g, inv;
    mpz_invert(inv.get_mpz_t(), xr.get_mpz_t(), m.get_mpz_t());
    Integer q;
    mpz_fdiv_r(q.get_mpz_t(), Integer(yr * inv).get_mpz_t(), m.get_mpz_t());
    return Payload(q);
}

Payload ModNImpl::parse(std::string_view text, std::size_t offset) const {
    return reduce(parse_signed_integer(text, offset));
}

std::string ModNImpl::format(const Payload& a) const { return as_int(a).get_str(); }

Payload ModNImpl::element_at(const Integer& index) const {
    if (index < 0 || index >= n_) throw PreconditionError("element index out of range for " + spec());
    return index;
}

Integer ModNImpl::index_of(const Payload& a) const { return as_int(a); }

// ---- GF(p)[x] ---------------------------------------------------------------

namespace {

Poly poly_from_integer(const PrimeField& field, const Integer& n) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), field.p());
    return Poly::constant(r.get_ui());
}

Poly parse_poly_literal(const PrimeField& field, std::string_view text, std::size_t offset) {
    std::vector<std::uint64_t> coeffs;
    for (const auto& [piece, at] : split_top_level(text, ',')) {
        Integer v = parse_signed_integer(piece, offset + at);
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), field.p());
        coeffs.push_back(r.get_ui());
    }
    return Poly(std::move(coeffs));
}

}  // namespace

Payload PolyImpl::from_integer(const Integer& n) const { return poly_from_integer(field_, n); }
Payload PolyImpl::add(const Payload& a, const Payload& b) const { return field_.add(as_poly(a), as_poly(b)); }
Payload PolyImpl::mul(const Payload& a, const Payload& b) const { return field_.mul(as_poly(a), as_poly(b)); }
Payload PolyImpl::neg(const Payload& a) const { return field_.neg(as_poly(a)); }
bool PolyImpl::is_unit(const Payload& a) const { return as_poly(a).degree() == 0; }

std::optional<Payload> PolyImpl::divide(const Payload& a, const Payload& b) const {
    const Poly& x = as_poly(a);
    const Poly& y = as_poly(b);
    if (x.is_zero()) {
        if (y.is_zero()) return Payload(Poly{});
        return std::nullopt;
    }
    auto [q, r] = field_.divmod(y, x);
    if (!r.is_zero()) return std::nullopt;
    return Payload(q);
}

Payload PolyImpl::parse(std::string_view text, std::size_t offset) const {
    return parse_poly_literal(field_, text, offset);
}

std::string PolyImpl::format(const Payload& a) const { return format_poly(as_poly(a)); }

// ---- GF(p)[x]/(f) -----------------------------------------------------------

PolyQuotientImpl::PolyQuotientImpl(std::uint64_t p, Poly f, bool zero_ring_flag)
    : field_(p), f_(field_.monic(f)), zero_ring_(zero_ring_flag) {}

std::string PolyQuotientImpl::spec() const {
    return "GF(" + std::to_string(field_.p()) + ")[x]/(" + format_poly(f_) + ")";
}

std::optional<Integer> PolyQuotientImpl::cardinality() const {
    Integer c;
    mpz_ui_pow_ui(c.get_mpz_t(), field_.p(), static_cast<unsigned long>(f_.degree()));
    return c;
}

Poly PolyQuotientImpl::reduce(const Poly& a) const { return field_.mod(a, f_); }

Payload PolyQuotientImpl::from_integer(const Integer& n) const { return reduce(poly_from_integer(field_, n)); }
Payload PolyQuotientImpl::add(const Payload& a, const Payload& b) const { return field_.add(as_poly(a), as_poly(b)); }
Payload PolyQuotientImpl::mul(const Payload& a, const Payload& b) const {
    return reduce(field_.mul(as_poly(a), as_poly(b)));
}
Payload PolyQuotientImpl::neg(const Payload& a) const { return field_.neg(as_poly(a)); }

bool PolyQuotientImpl::is_unit(const Payload& a) const {
    if (zero_ring_) return true;
    return field_.ext_gcd(as_poly(a), f_).g.degree() == 0;
}

std::optional<Payload> PolyQuotientImpl::divide(const Payload& a, const Payload& b) const {
    // Same shape as Z/n: solvable iff g = gcd(a, f) divides b, solutions are
    // q0 + (f/g)k and the reduced q0 has the least index.
    if (zero_ring_) return Payload(Poly{});
    const Poly& x = as_poly(a);
    const Poly& y = as_poly(b);
    auto eg = field_.ext_gcd(x, f_);
    auto [yq, yr] = field_.divmod(y, eg.g);
    if (!yr.is_zero()) return std::nullopt;
    Poly m = field_.divmod(f_, eg.g).first;
    // x*u = g (mod f) so (x/g)*u = 1 (mod f/g)
    Poly q = field_.mod(field_.mul(yq, eg.u), m);
    return Payload(q);
}

Payload PolyQuotientImpl::parse(std::string_view text, std::size_t offset) const {
    return reduce(parse_poly_literal(field_, text, offset));
}

std::string PolyQuotientImpl::format(const Payload& a) const { return format_poly(as_poly(a)); }

Payload PolyQuotientImpl::element_at(const Integer& index) const {
    if (index < 0 || index >= *cardinality()) throw PreconditionError("element index out of range for " + spec());
    std::vector<std::uint64_t> coeffs;
    Integer rest = index;
    while (rest > 0) {
        Integer digit;
        mpz_fdiv_qr_ui(rest.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(), field_.p());
        coeffs.push_back(digit.get_ui());
    }
    return Poly(std::move(coeffs));
}

Integer PolyQuotientImpl::index_of(const Payload& a) const {
    const auto& c = as_poly(a).coeffs();
    Integer idx = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        idx *= static_cast<unsigned long>(field_.p());
        idx += static_cast<unsigned long>(c[i]);
    }
    return idx;
}

// ---- products ---------------------------------------------------------------

std::optional<Integer> ProductImpl::cardinality() const {
    auto l = left_.cardinality();
    auto r = right_.cardinality();
    if (!l || !r) return std::nullopt;
    return Integer(*l * *r);
}

Payload ProductImpl::zero() const { return pair_payload(left_.zero().payload(), right_.zero().payload()); }
Payload ProductImpl::one() const { return pair_payload(left_.one().payload(), right_.one().payload()); }

Payload ProductImpl::from_integer(const Integer& n) const {
    return pair_payload(left_.from_integer(n).payload(), right_.from_integer(n).payload());
}

Payload ProductImpl::add(const Payload& a, const Payload& b) const {
    const auto& x = as_parts(a).parts;
    const auto& y = as_parts(b).parts;
    return pair_payload(left_.impl().add(x[0], y[0]), right_.impl().add(x[1], y[1]));
}

Payload ProductImpl::mul(const Payload& a, const Payload& b) const {
    const auto& x = as_parts(a).parts;
    const auto& y = as_parts(b).parts;
    return pair_payload(left_.impl().mul(x[0], y[0]), right_.impl().mul(x[1], y[1]));
}

Payload ProductImpl::neg(const Payload& a) const {
    const auto& x = as_parts(a).parts;
    return pair_payload(left_.impl().neg(x[0]), right_.impl().neg(x[1]));
}

bool ProductImpl::is_unit(const Payload& a) const {
    const auto& x = as_parts(a).parts;
    return left_.impl().is_unit(x[0]) && right_.impl().is_unit(x[1]);
}

std::optional<Payload> ProductImpl::divide(const Payload& a, const Payload& b) const {
    // Index order is lexicographic, so componentwise least quotients give the
    // least quotient overall.
    const auto& x = as_parts(a).parts;
    const auto& y = as_parts(b).parts;
    auto l = left_.impl().divide(x[0], y[0]);
    if (!l) return std::nullopt;
    auto r = right_.impl().divide(x[1], y[1]);
    if (!r) return std::nullopt;
    return pair_payload(std::move(*l), std::move(*r));
}

Payload ProductImpl::parse(std::string_view text, std::size_t offset) const {
    std::string_view body = text;
    std::size_t at = offset;
    trim(body, at);
    if (body.size() < 2 || body.front() != '(' || body.back() != ')')
        throw ParseError("product element must look like (left|right)", at);
    body = body.substr(1, body.size() - 2);
    auto pieces = split_top_level(body, '|');
    if (pieces.size() != 2) throw ParseError("product element needs exactly one top-level '|'", at + 1);
    return pair_payload(left_.impl().parse(pieces[0].first, at + 1 + pieces[0].second),
                        right_.impl().parse(pieces[1].first, at + 1 + pieces[1].second));
}

std::string ProductImpl::format(const Payload& a) const {
    const auto& x = as_parts(a).parts;
    return "(" + left_.impl().format(x[0]) + "|" + right_.impl().format(x[1]) + ")";
}

Payload ProductImpl::element_at(const Integer& index) const {
    auto card = cardinality();
    if (!card) throw InfiniteRing("element enumeration requires a finite ring, got " + spec());
    if (index < 0 || index >= *card) throw PreconditionError("element index out of range for " + spec());
    const Integer m = *right_.cardinality();
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), index.get_mpz_t(), m.get_mpz_t());
    return pair_payload(left_.impl().element_at(q), right_.impl().element_at(r));
}

Integer ProductImpl::index_of(const Payload& a) const {
    auto card = right_.cardinality();
    if (!card || !left_.cardinality()) throw InfiniteRing("element enumeration requires a finite ring, got " + spec());
    const auto& x = as_parts(a).parts;
    return Integer(left_.impl().index_of(x[0]) * *card + right_.impl().index_of(x[1]));
}

// ---- coset quotients --------------------------------------------------------

QuotientImpl::QuotientImpl(Ring base, std::vector<Element> generators)
    : base_(std::move(base)), generators_(std::move(generators)) {
    const auto elems = base_.elements();
    const std::size_t n = elems.size();
    auto idx = [&](const Element& e) { return to_size(base_.index_of(e)); };

    // Ideal membership by closure: I = sum of the principal ideals g*R.
    std::vector<char> in_ideal(n, 0);
    std::vector<std::size_t> ideal{to_size(base_.index_of(base_.zero()))};
    in_ideal[ideal[0]] = 1;
    for (const auto& g : generators_) {
        std::vector<std::size_t> principal;
        std::vector<char> seen(n, 0);
        for (const auto& r : elems) {
            std::size_t k = idx(g * r);
            if (!seen[k]) {
                seen[k] = 1;
                principal.push_back(k);
            }
        }
        std::vector<std::size_t> next;
        std::vector<char> in_next(n, 0);
        for (std::size_t i : ideal) {
            for (std::size_t j : principal) {
                std::size_t k = idx(elems[i] + elems[j]);
                if (!in_next[k]) {
                    in_next[k] = 1;
                    next.push_back(k);
                }
            }
        }
        ideal = std::move(next);
        in_ideal = std::move(in_next);
    }

    const std::size_t unassigned = n;
    coset_.assign(n, unassigned);
    for (std::size_t i = 0; i < n; ++i) {
        if (coset_[i] != unassigned) continue;
        const std::size_t id = reps_.size();
        reps_.push_back(elems[i].payload());
        for (std::size_t m : ideal) coset_[idx(elems[i] + elems[m])] = id;
    }
}

std::string QuotientImpl::spec() const {
    std::string gens;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (i) gens += ",";
        gens += generators_[i].to_string();
    }
    return "(" + base_.spec() + ")/(" + gens + ")";
}

std::size_t QuotientImpl::coset_of(const Payload& base_value) const {
    return coset_[to_size(base_.impl().index_of(base_value))];
}

Payload QuotientImpl::canonical(const Payload& base_value) const { return reps_[coset_of(base_value)]; }

Payload QuotientImpl::zero() const { return canonical(base_.impl().zero()); }
Payload QuotientImpl::one() const { return canonical(base_.impl().one()); }
Payload QuotientImpl::from_integer(const Integer& n) const { return canonical(base_.impl().from_integer(n)); }
Payload QuotientImpl::add(const Payload& a, const Payload& b) const { return canonical(base_.impl().add(a, b)); }
Payload QuotientImpl::mul(const Payload& a, const Payload& b) const { return canonical(base_.impl().mul(a, b)); }
Payload QuotientImpl::neg(const Payload& a) const { return canonical(base_.impl().neg(a)); }

bool QuotientImpl::is_unit(const Payload& a) const { return divide(a, one()).has_value(); }

std::optional<Payload> QuotientImpl::divide(const Payload& a, const Payload& b) const {
    const std::size_t target = coset_of(b);
    for (const auto& q : reps_)
        if (coset_of(base_.impl().mul(a, q)) == target) return q;
    return std::nullopt;
}

Payload QuotientImpl::parse(std::string_view text, std::size_t offset) const {
    return canonical(base_.impl().parse(text, offset));
}

std::string QuotientImpl::format(const Payload& a) const { return base_.impl().format(a); }

Payload QuotientImpl::element_at(const Integer& index) const {
    if (index < 0 || index >= static_cast<unsigned long>(reps_.size()))
        throw PreconditionError("element index out of range for " + spec());
    return reps_[to_size(index)];
}

Integer QuotientImpl::index_of(const Payload& a) const {
    return Integer(static_cast<unsigned long>(coset_of(a)));
}

}  // namespace edr::detail
