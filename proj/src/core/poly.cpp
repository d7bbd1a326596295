#include "edr/core/poly.hpp"

#include <stdexcept>

namespace edr {

namespace {
using u128 = unsigned __int128;
}

Poly Poly::monomial(std::size_t degree, std::uint64_t c) {
    std::vector<std::uint64_t> v(degree + 1, 0);
    v[degree] = c;
    return Poly(std::move(v));
}

std::uint64_t PrimeField::reduce(std::int64_t v) const {
    auto m = static_cast<std::int64_t>(p_);
    if (m <= 0) {
        // p beyond the int64 range: only nonnegative values can reach here
        return static_cast<std::uint64_t>(v) % p_;
    }
    std::int64_t r = v % m;
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t PrimeField::add(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<u128>(a) + b) % p_);
}

std::uint64_t PrimeField::sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : static_cast<std::uint64_t>(static_cast<u128>(a) + p_ - b);
}

std::uint64_t PrimeField::mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p_);
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero in GF(p)");
    // a^(p-2)
    std::uint64_t result = 1, base = a % p_, e = p_ - 2;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Poly PrimeField::add(const Poly& a, const Poly& b) const {
    std::vector<std::uint64_t> r(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = add(a.coeff(i), b.coeff(i));
    return Poly(std::move(r));
}

Poly PrimeField::sub(const Poly& a, const Poly& b) const {
    std::vector<std::uint64_t> r(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = sub(a.coeff(i), b.coeff(i));
    return Poly(std::move(r));
}

Poly PrimeField::neg(const Poly& a) const { return sub(Poly{}, a); }

Poly PrimeField::mul(const Poly& a, const Poly& b) const {
    if (a.is_zero() || b.is_zero()) return {};
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<std::uint64_t> r(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) r[i + j] = add(r[i + j], mul(x[i], y[j]));
    }
    return Poly(std::move(r));
}

Poly PrimeField::scale(const Poly& a, std::uint64_t c) const {
    std::vector<std::uint64_t> r(a.coeffs());
    for (auto& v : r) v = mul(v, c);
    return Poly(std::move(r));
}

std::pair<Poly, Poly> PrimeField::divmod(const Poly& a, const Poly& b) const {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<std::uint64_t> rem(a.coeffs());
    const auto& d = b.coeffs();
    const std::size_t db = d.size() - 1;
    const std::uint64_t lead_inv = inv(b.lead());
    std::vector<std::uint64_t> quot(rem.size() - db, 0);
    for (std::size_t k = rem.size(); k-- > db;) {
        std::uint64_t q = mul(rem[k], lead_inv);
        if (q == 0) continue;
        quot[k - db] = q;
        for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = sub(rem[k - db + j], mul(q, d[j]));
    }
    rem.resize(db);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly PrimeField::monic(const Poly& a) const {
    if (a.is_zero() || a.lead() == 1) return a;
    return scale(a, inv(a.lead()));
}

PrimeField::ExtGcd PrimeField::ext_gcd(const Poly& a, const Poly& b) const {
    Poly old_r = a, r = b;
    Poly old_s = Poly::constant(1), s;
    Poly old_t, t = Poly::constant(1);
    while (!r.is_zero()) {
        auto [q, rem] = divmod(old_r, r);
        old_r = std::exchange(r, rem);
        old_s = std::exchange(s, sub(old_s, mul(q, s)));
        old_t = std::exchange(t, sub(old_t, mul(q, t)));
    }
    if (old_r.is_zero()) return {Poly{}, Poly{}, Poly{}};
    const std::uint64_t k = inv(old_r.lead());
    return {scale(old_r, k), scale(old_s, k), scale(old_t, k)};
}

std::string format_poly(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(f.coeffs()[i]);
    }
    return out;
}

}  // namespace edr
