#include "edr/core/ring.hpp"

#include <ostream>

#include "parse_util.hpp"
#include "ring_impl.hpp"

namespace edr {

using detail::IntegersImpl;
using detail::ModNImpl;
using detail::PolyImpl;
using detail::PolyQuotientImpl;
using detail::ProductImpl;
using detail::QuotientImpl;

namespace {

template <typename Impl>
const Impl* impl_as(const Ring& r) {
    return dynamic_cast<const Impl*>(&r.impl());
}

template <typename Impl>
const Impl& require(const Ring& r, const char* what) {
    if (auto p = impl_as<Impl>(r)) return *p;
    throw UnsupportedRing(std::string(what) + " is not defined for " + r.spec());
}

void same_ring(const Element& a, const Element& b) {
    if (!(a.ring() == b.ring())) throw RingMismatch();
}

bool is_prime(std::uint64_t p) {
    Integer v(static_cast<unsigned long>(p));
    return mpz_probab_prime_p(v.get_mpz_t(), 40) > 0;
}

Ring make_mod(const Integer& n, bool zero_ring) {
    return Ring(std::make_shared<const ModNImpl>(n, zero_ring));
}

}  // namespace

// ---- Ring -------------------------------------------------------------------

RingKind Ring::kind() const { return impl_->kind(); }
std::optional<Integer> Ring::cardinality() const { return impl_->cardinality(); }
bool Ring::is_zero_ring() const { return impl_->zero_ring(); }
std::string Ring::spec() const { return impl_->spec(); }
Element Ring::zero() const { return Element(*this, impl_->zero()); }
Element Ring::one() const { return Element(*this, impl_->one()); }
Element Ring::from_integer(const Integer& n) const { return Element(*this, impl_->from_integer(n)); }
Element Ring::from_int(long n) const { return from_integer(Integer(n)); }
Element Ring::parse_element(std::string_view text) const { return Element(*this, impl_->parse(text, 0)); }

const Integer& Ring::modulus() const { return require<ModNImpl>(*this, "modulus").n(); }

std::uint64_t Ring::prime() const {
    if (auto p = impl_as<PolyImpl>(*this)) return p->field().p();
    return require<PolyQuotientImpl>(*this, "prime").field().p();
}

const Poly& Ring::poly_modulus() const { return require<PolyQuotientImpl>(*this, "poly_modulus").f(); }
const Ring& Ring::left() const { return require<ProductImpl>(*this, "left").left(); }
const Ring& Ring::right() const { return require<ProductImpl>(*this, "right").right(); }
const Ring& Ring::base() const { return require<QuotientImpl>(*this, "base").base(); }

Element Ring::element_at(const Integer& index) const { return Element(*this, impl_->element_at(index)); }

Integer Ring::index_of(const Element& x) const {
    if (!(x.ring() == *this)) throw RingMismatch();
    return impl_->index_of(x.payload());
}

std::vector<Element> Ring::elements(std::size_t limit) const {
    auto card = cardinality();
    if (!card) throw InfiniteRing("cannot enumerate the elements of " + spec());
    if (*card > static_cast<unsigned long>(limit))
        throw PreconditionError(spec() + " has " + card->get_str() + " elements, above the enumeration limit " +
                                std::to_string(limit));
    std::vector<Element> out;
    const std::size_t n = card->get_ui();
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(element_at(Integer(static_cast<unsigned long>(i))));
    return out;
}

bool Ring::operator==(const Ring& other) const {
    if (impl_ == other.impl_) return true;
    return kind() == other.kind() && spec() == other.spec();
}

// ---- Element ----------------------------------------------------------------

const Integer& Element::integer() const {
    if (auto p = std::get_if<Integer>(&value_)) return *p;
    throw UnsupportedRing("element of " + ring_.spec() + " is not an integer residue");
}

const Poly& Element::poly() const {
    if (auto p = std::get_if<Poly>(&value_)) return *p;
    throw UnsupportedRing("element of " + ring_.spec() + " is not a polynomial");
}

Element Element::left() const { return Element(ring_.left(), std::get<Components>(value_).parts[0]); }
Element Element::right() const { return Element(ring_.right(), std::get<Components>(value_).parts[1]); }

bool Element::is_zero() const { return *this == ring_.zero(); }

std::string Element::to_string() const { return ring_.impl().format(value_); }

Element operator+(const Element& a, const Element& b) {
    same_ring(a, b);
    return Element(a.ring_, a.ring_.impl().add(a.value_, b.value_));
}

Element operator-(const Element& a, const Element& b) {
    same_ring(a, b);
    const auto& r = a.ring_.impl();
    return Element(a.ring_, r.add(a.value_, r.neg(b.value_)));
}

Element operator*(const Element& a, const Element& b) {
    same_ring(a, b);
    return Element(a.ring_, a.ring_.impl().mul(a.value_, b.value_));
}

Element operator-(const Element& a) { return Element(a.ring_, a.ring_.impl().neg(a.value_)); }

bool operator==(const Element& a, const Element& b) {
    same_ring(a, b);
    return a.value_ == b.value_;
}

std::ostream& operator<<(std::ostream& os, const Element& x) { return os << x.to_string(); }

// ---- constructors -----------------------------------------------------------

Ring integers() {
    static const Ring z(std::make_shared<const IntegersImpl>());
    return z;
}

Ring integers_mod(const Integer& n) {
    if (n < 2) throw PreconditionError("Z/n requires n >= 2, got " + n.get_str());
    return make_mod(n, false);
}

Ring polynomials_over(std::uint64_t p) {
    if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
    return Ring(std::make_shared<const PolyImpl>(p));
}

Ring polynomial_quotient(std::uint64_t p, const Poly& f) {
    if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
    if (f.is_zero()) throw PreconditionError("zero modulus polynomial");
    if (f.degree() < 1) throw PreconditionError("modulus polynomial must have positive degree");
    return Ring(std::make_shared<const PolyQuotientImpl>(p, f, false));
}

Ring product(const Ring& left, const Ring& right) {
    return Ring(std::make_shared<const ProductImpl>(left, right));
}

// ---- ring spec parser -------------------------------------------------------

namespace {

class RingParser {
public:
    explicit RingParser(std::string_view text) : text_(text) {}

    Ring parse() {
        skip_ws();
        Ring r = atom();
        for (;;) {
            std::size_t save = pos_;
            skip_ws();
            if (pos_ > save && peek() == 'x' && pos_ + 1 < text_.size() && text_[pos_ + 1] == ' ') {
                ++pos_;
                skip_ws();
                r = product(r, atom());
                continue;
            }
            pos_ = save;
            break;
        }
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input in ring spec", pos_);
        return r;
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    bool consume(std::string_view token) {
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view token) {
        if (!consume(token)) throw ParseError("expected '" + std::string(token) + "' in ring spec", pos_);
    }

    Integer natural() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected a natural number", start);
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    Ring atom() {
        const std::size_t start = pos_;
        if (consume("GF(")) {
            Integer p = natural();
            if (!p.fits_ulong_p() || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
                throw ParseError(p.get_str() + " is not prime", start + 3);
            expect(")[x]");
            Ring base = polynomials_over(p.get_ui());
            if (!consume("/(")) return base;
            const std::size_t body = pos_;
            std::size_t close = text_.find(')', pos_);
            if (close == std::string_view::npos) throw ParseError("unterminated modulus polynomial", body);
            Poly f = base.parse_element(text_.substr(body, close - body)).poly();
            pos_ = close + 1;
            if (f.is_zero()) throw ParseError("zero modulus polynomial", body);
            if (f.degree() < 1) throw ParseError("modulus polynomial must have positive degree", body);
            return polynomial_quotient(p.get_ui(), f);
        }
        if (consume("Z")) {
            if (!consume("/")) return integers();
            const std::size_t at = pos_;
            Integer n = natural();
            if (n < 2) throw ParseError("Z/n requires n >= 2", at);
            return integers_mod(n);
        }
        throw ParseError("expected 'Z' or 'GF(' in ring spec", start);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Ring parse_ring(std::string_view text) {
    try {
        return RingParser(text).parse();
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what(), 0);
    }
}

// ---- units, divisibility ----------------------------------------------------

bool is_unit(const Element& a) { return a.ring().impl().is_unit(a.payload()); }

std::optional<Element> inverse(const Element& a) { return divides(a, a.ring().one()); }

std::optional<Element> divides(const Element& a, const Element& b) {
    same_ring(a, b);
    auto q = a.ring().impl().divide(a.payload(), b.payload());
    if (!q) return std::nullopt;
    return Element(a.ring(), std::move(*q));
}

// ---- Bezout -----------------------------------------------------------------

namespace {

Element exact(const Element& a, const Element& b) {
    // b / a where a | b is known
    auto q = divides(a, b);
    if (!q) throw Error("internal: expected " + a.to_string() + " to divide " + b.to_string());
    return *q;
}

/// Plain extended Euclid on integers, g >= 0.
void integer_ext_gcd(const Integer& a, const Integer& b, Integer& g, Integer& u, Integer& v) {
    Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
        Integer tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    g = old_r;
    u = old_s;
    v = old_t;
}

BezoutCertificate cofactors(const Element& a, const Element& b, Element g, Element u, Element v) {
    const Ring& R = a.ring();
    if (g.is_zero()) return {g, R.zero(), R.zero(), R.zero(), R.zero()};  // a = b = 0
    Element a1 = exact(g, a);
    Element b1 = exact(g, b);
    return {std::move(g), std::move(u), std::move(v), std::move(a1), std::move(b1)};
}

BezoutCertificate bezout_by_search(const Element& a, const Element& b) {
    const Ring& R = a.ring();
    const auto elems = R.elements();
    std::vector<char> in_sum(elems.size(), 0);
    auto idx = [&](const Element& e) { return R.index_of(e).get_ui(); };
    for (const auto& r : elems)
        for (const auto& s : elems) in_sum[idx(a * r + b * s)] = 1;

    for (const auto& g : elems) {
        if (!in_sum[idx(g)]) continue;
        std::vector<char> in_principal(elems.size(), 0);
        for (const auto& r : elems) in_principal[idx(g * r)] = 1;
        if (in_principal != in_sum) continue;
        for (const auto& u : elems) {
            if (auto v = divides(b, g - a * u)) return cofactors(a, b, g, u, *v);
        }
    }
    throw UnsupportedRing("ideal generated by " + a.to_string() + " and " + b.to_string() + " in " + R.spec() +
                          " is not principal");
}

}  // namespace

BezoutCertificate bezout_gcd(const Element& a, const Element& b) {
    same_ring(a, b);
    const Ring& R = a.ring();
    switch (R.kind()) {
        case RingKind::Integers: {
            Integer g, u, v;
            integer_ext_gcd(a.integer(), b.integer(), g, u, v);
            return cofactors(a, b, R.from_integer(g), R.from_integer(u), R.from_integer(v));
        }
        case RingKind::PolynomialsOverPrimeField: {
            auto eg = impl_as<PolyImpl>(R)->field().ext_gcd(a.poly(), b.poly());
            return cofactors(a, b, Element(R, eg.g), Element(R, eg.u), Element(R, eg.v));
        }
        case RingKind::IntegersModN: {
            // gcd(a, b, n) lifted from Z
            Integer g0, u0, v0, g, u1, v1;
            integer_ext_gcd(a.integer(), b.integer(), g0, u0, v0);
            integer_ext_gcd(g0, R.modulus(), g, u1, v1);
            return cofactors(a, b, R.from_integer(g), R.from_integer(u0 * u1), R.from_integer(v0 * u1));
        }
        case RingKind::PolynomialQuotient: {
            const auto& q = *impl_as<PolyQuotientImpl>(R);
            const auto& F = q.field();
            auto e0 = F.ext_gcd(a.poly(), b.poly());
            auto e1 = F.ext_gcd(e0.g, q.f());
            return cofactors(a, b, Element(R, q.reduce(e1.g)), Element(R, q.reduce(F.mul(e0.u, e1.u))),
                             Element(R, q.reduce(F.mul(e0.v, e1.u))));
        }
        case RingKind::Product: {
            auto l = bezout_gcd(a.left(), b.left());
            auto r = bezout_gcd(a.right(), b.right());
            auto join = [&](const Element& x, const Element& y) {
                return Element(R, Components{{x.payload(), y.payload()}});
            };
            return {join(l.g, r.g), join(l.u, r.u), join(l.v, r.v), join(l.a1, r.a1), join(l.b1, r.b1)};
        }
        case RingKind::Quotient:
            return bezout_by_search(a, b);
    }
    throw UnsupportedRing("bezout_gcd is not defined for " + R.spec());
}

// ---- quotients --------------------------------------------------------------

Ring quotient_ring(const Ring& ring, const Element& c) {
    if (!(c.ring() == ring)) throw RingMismatch();
    switch (ring.kind()) {
        case RingKind::Integers: {
            Integer n = abs(c.integer());
            if (n == 0) return ring;
            return make_mod(n, n == 1);
        }
        case RingKind::PolynomialsOverPrimeField: {
            const Poly& f = c.poly();
            if (f.is_zero()) return ring;
            return Ring(std::make_shared<const PolyQuotientImpl>(ring.prime(), f, f.degree() == 0));
        }
        default: {
            Element gens[] = {c};
            return quotient_by_ideal(ring, gens);
        }
    }
}

Ring quotient_by_ideal(const Ring& ring, std::span<const Element> generators) {
    if (!ring.is_finite()) throw InfiniteRing("coset enumeration requires a finite ring, got " + ring.spec());
    std::vector<Element> gens;
    Ring base = ring;
    if (auto q = impl_as<QuotientImpl>(ring)) {
        // flatten (R/I)/J into R/(I + J)
        base = q->base();
        gens = q->generators();
        for (const auto& g : generators) gens.emplace_back(base, g.payload());
    } else {
        for (const auto& g : generators) {
            if (!(g.ring() == ring)) throw RingMismatch();
            gens.push_back(g);
        }
    }
    return Ring(std::make_shared<const QuotientImpl>(std::move(base), std::move(gens)));
}

Element project(const Ring& target, const Element& x) {
    if (x.ring() == target) return x;
    if (auto m = impl_as<ModNImpl>(target)) {
        if (x.ring().kind() == RingKind::Integers) return Element(target, m->reduce(x.integer()));
    }
    if (auto q = impl_as<PolyQuotientImpl>(target)) {
        if (x.ring().kind() == RingKind::PolynomialsOverPrimeField && x.ring().prime() == q->field().p())
            return Element(target, q->reduce(x.poly()));
    }
    if (auto q = impl_as<QuotientImpl>(target)) {
        if (x.ring() == q->base()) return Element(target, q->canonical(x.payload()));
    }
    throw RingMismatch();
}

// ---- radical, annihilator ---------------------------------------------------

JacobsonRadicalSet jacobson_radical(const Ring& ring) {
    if (!ring.is_finite()) throw InfiniteRing("jacobson_radical requires a finite ring, got " + ring.spec());
    const auto elems = ring.elements();
    const Element one = ring.one();
    JacobsonRadicalSet out{ring, {}};
    for (const auto& x : elems) {
        bool member = true;
        for (const auto& r : elems) {
            if (!is_unit(one - x * r)) {
                member = false;
                break;
            }
        }
        if (member) out.members.push_back(x);
    }
    return out;
}

std::vector<Element> annihilator(const Element& a) {
    const Ring& R = a.ring();
    if (!R.is_finite()) throw InfiniteRing("annihilator requires a finite ring, got " + R.spec());
    std::vector<Element> out;
    for (const auto& x : R.elements())
        if ((a * x).is_zero()) out.push_back(x);
    return out;
}

// ---- normalization ----------------------------------------------------------

Integer euclidean_norm(const Element& x) {
    switch (x.ring().kind()) {
        case RingKind::Integers:
            return abs(x.integer());
        case RingKind::PolynomialsOverPrimeField:
            return Integer(x.poly().degree() + 1);
        default:
            throw UnsupportedRing("no Euclidean norm on " + x.ring().spec());
    }
}

Element normalizing_unit(const Element& x) {
    const Ring& R = x.ring();
    switch (R.kind()) {
        case RingKind::Integers:
            return R.from_int(x.integer() < 0 ? -1 : 1);
        case RingKind::PolynomialsOverPrimeField: {
            if (x.poly().is_zero()) return R.one();
            PrimeField F(R.prime());
            return Element(R, Poly::constant(F.inv(x.poly().lead())));
        }
        default:
            return R.one();
    }
}

}  // namespace edr
