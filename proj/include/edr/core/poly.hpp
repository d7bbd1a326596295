#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace edr {

/// Dense univariate polynomial, coefficients low-to-high, never with a
/// trailing zero coefficient. The zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<std::uint64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(std::uint64_t c) { return Poly(std::vector<std::uint64_t>{c}); }
    static Poly monomial(std::size_t degree, std::uint64_t c = 1);

    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::uint64_t lead() const { return c_.empty() ? 0 : c_.back(); }
    std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

    friend bool operator==(const Poly&, const Poly&) = default;
    friend auto operator<=>(const Poly& a, const Poly& b) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<std::uint64_t> c_;
};

/// Arithmetic in GF(p) and GF(p)[x]. `p` must be prime for inverse/div.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p) : p_(p) {}
    std::uint64_t p() const { return p_; }

    std::uint64_t reduce(std::int64_t v) const;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv(std::uint64_t a) const;

    Poly add(const Poly& a, const Poly& b) const;
    Poly sub(const Poly& a, const Poly& b) const;
    Poly neg(const Poly& a) const;
    Poly mul(const Poly& a, const Poly& b) const;
    Poly scale(const Poly& a, std::uint64_t c) const;
    /// Quotient and remainder; `b` nonzero.
    std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) const;
    Poly mod(const Poly& a, const Poly& b) const { return divmod(a, b).second; }
    Poly monic(const Poly& a) const;

    struct ExtGcd {
        Poly g, u, v;  // a*u + b*v = g, g monic or zero
    };
    ExtGcd ext_gcd(const Poly& a, const Poly& b) const;

private:
    std::uint64_t p_;
};

std::string format_poly(const Poly& f);

}  // namespace edr
