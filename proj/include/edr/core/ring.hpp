#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "edr/core/error.hpp"
#include "edr/core/poly.hpp"

namespace edr {

using Integer = mpz_class;

enum class RingKind {
    Integers,
    IntegersModN,
    PolynomialsOverPrimeField,
    PolynomialQuotient,
    Quotient,
    Product,
};

struct Payload;

/// Product ring payload: one payload per factor.
struct Components {
    std::vector<Payload> parts;
    friend bool operator==(const Components&, const Components&);
};

/// Canonical representative of a ring element. Integers for Z and Z/n
/// (residue in [0, n)), a trimmed coefficient vector for the polynomial
/// kinds, factor payloads for products. Quotients of finite rings store the
/// least-index member of the coset in the base ring's payload form.
struct Payload : std::variant<Integer, Poly, Components> {
    using variant::variant;
};

inline bool operator==(const Components& a, const Components& b) { return a.parts == b.parts; }

class Element;

namespace detail {
class RingImpl;
}

/// Handle to an immutable commutative ring. Cheap to copy.
class Ring {
public:
    explicit Ring(std::shared_ptr<const detail::RingImpl> impl) : impl_(std::move(impl)) {}

    RingKind kind() const;
    bool is_finite() const { return cardinality().has_value(); }
    std::optional<Integer> cardinality() const;
    /// Set on the one-element ring obtained by quotienting by a unit.
    bool is_zero_ring() const;
    /// Text form; parses back with parse_ring() for every kind except Quotient.
    std::string spec() const;

    Element zero() const;
    Element one() const;
    /// Image of n under the canonical map Z -> R.
    Element from_integer(const Integer& n) const;
    Element from_int(long n) const;
    Element parse_element(std::string_view text) const;

    // Kind-specific structure. Each throws UnsupportedRing on the wrong kind.
    const Integer& modulus() const;         // IntegersModN
    std::uint64_t prime() const;            // polynomial kinds
    const Poly& poly_modulus() const;       // PolynomialQuotient, monic
    const Ring& left() const;               // Product
    const Ring& right() const;              // Product
    const Ring& base() const;               // Quotient

    /// Canonical element order on finite rings: Z/n by residue, polynomial
    /// quotients by sum c_i p^i, products lexicographically, quotients by
    /// the index of the coset representative's rank.
    Element element_at(const Integer& index) const;
    Integer index_of(const Element& x) const;
    /// All elements in canonical order; throws if the ring is infinite or
    /// larger than `limit`.
    std::vector<Element> elements(std::size_t limit = 1u << 16) const;

    bool operator==(const Ring& other) const;

    const detail::RingImpl& impl() const { return *impl_; }

private:
    std::shared_ptr<const detail::RingImpl> impl_;
};

class Element {
public:
    Element(Ring ring, Payload value) : ring_(std::move(ring)), value_(std::move(value)) {}

    const Ring& ring() const { return ring_; }
    const Payload& payload() const { return value_; }

    const Integer& integer() const;   // Integers, IntegersModN
    const Poly& poly() const;         // polynomial kinds
    Element left() const;             // Product
    Element right() const;            // Product

    bool is_zero() const;
    std::string to_string() const;

    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Element& a, const Element& b);
    friend Element operator-(const Element& a);
    friend bool operator==(const Element& a, const Element& b);

    Element& operator+=(const Element& b) { return *this = *this + b; }
    Element& operator-=(const Element& b) { return *this = *this - b; }
    Element& operator*=(const Element& b) { return *this = *this * b; }

private:
    Ring ring_;
    Payload value_;
};

std::ostream& operator<<(std::ostream& os, const Element& x);

// Constructors. integers_mod requires n >= 2; polynomials_over and
// polynomial_quotient require p prime and deg f >= 1.
Ring integers();
Ring integers_mod(const Integer& n);
Ring polynomials_over(std::uint64_t p);
Ring polynomial_quotient(std::uint64_t p, const Poly& f);
Ring product(const Ring& left, const Ring& right);

/// Grammar: ring := "Z" | "Z/" nat | "GF(" prime ")[x]" | "GF(" prime ")[x]/(" poly ")"
/// | ring " x " ring (left associative).
Ring parse_ring(std::string_view text);

bool is_unit(const Element& a);
std::optional<Element> inverse(const Element& a);

/// Some q with a*q = b; over rings with zero divisors the one of least
/// canonical index.
std::optional<Element> divides(const Element& a, const Element& b);

/// g = a*u + b*v, a = g*a1, b = g*b1.
struct BezoutCertificate {
    Element g, u, v, a1, b1;
};

/// Supported on Z (g >= 0), GF(p)[x] (g monic or zero), and finite rings
/// (generator searched in canonical order; UnsupportedRing if aR + bR is not
/// principal).
BezoutCertificate bezout_gcd(const Element& a, const Element& b);

/// Ideal quotient R/cR. Z/(c) becomes Z/|c| (Z itself for c = 0),
/// GF(p)[x]/(f) becomes a PolynomialQuotient, finite rings are reduced by
/// coset enumeration. Quotienting by a unit yields the flagged zero ring.
Ring quotient_ring(const Ring& ring, const Element& c);

/// R/I for I generated by `generators`; `ring` must be finite.
Ring quotient_by_ideal(const Ring& ring, std::span<const Element> generators);

/// Image of `x` in `target`, where `target` was produced by quotient_ring or
/// quotient_by_ideal from x's ring (Z -> Z/n, GF(p)[x] -> GF(p)[x]/(f), R -> R/I).
Element project(const Ring& target, const Element& x);

struct JacobsonRadicalSet {
    Ring ring;
    std::vector<Element> members;  // canonical order
};

/// {x : 1 - x*r is a unit for every r}; ring must be finite.
JacobsonRadicalSet jacobson_radical(const Ring& ring);

/// {x : a*x = 0} in canonical order; ring must be finite.
std::vector<Element> annihilator(const Element& a);

/// Euclidean size used for pivoting: |x| on Z, 1 + degree on GF(p)[x].
Integer euclidean_norm(const Element& x);

/// Normalization factor: the unit n with n*x normalized (nonnegative over Z,
/// monic over GF(p)[x]); one() elsewhere or when x is zero.
Element normalizing_unit(const Element& x);

}  // namespace edr
