#pragma once

// Reference computations for the tests. Everything here is deliberately
// naive and independent of the reduction code: minors by expansion, gcds
// straight from GMP or polynomial Euclid.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "edr/core/ring.hpp"
#include "edr/reduce/matrix.hpp"

namespace edr::oracle {

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Representative of the associate class: |x| over Z, monic over GF(p)[x].
inline Element normal(const Element& x) {
    const Ring& R = x.ring();
    if (R.kind() == RingKind::Integers) return R.from_integer(abs(x.integer()));
    if (R.kind() == RingKind::PolynomialsOverPrimeField) {
        if (x.is_zero()) return x;
        return Element(R, PrimeField(R.prime()).monic(x.poly()));
    }
    return x;
}

inline bool associated(const Element& x, const Element& y) { return normal(x) == normal(y); }

inline Element gcd(const Element& a, const Element& b) {
    const Ring& R = a.ring();
    if (R.kind() == RingKind::Integers) return R.from_integer(gcd(a.integer(), b.integer()));
    // plain Euclid on polynomials
    PrimeField F(R.prime());
    Poly x = a.poly(), y = b.poly();
    while (y.degree() >= 0) {
        Poly r = F.mod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return normal(Element(R, x));
}

// All k x k minors by Laplace expansion along the first chosen row,
// memoized on (row set, column set).
class Minors {
public:
    explicit Minors(const Matrix& A) : A_(A) {}

    Element of(std::uint32_t rows, std::uint32_t cols) {
        if (rows == 0) return A_.ring().one();
        const std::uint64_t key = (std::uint64_t{rows} << 32) | cols;
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const int r = __builtin_ctz(rows);
        Element acc = A_.ring().zero();
        bool plus = true;
        for (std::uint32_t c = 0; c < A_.cols(); ++c) {
            if (!(cols >> c & 1u)) continue;
            const Element& x = A_(r, c);
            if (!x.is_zero()) {
                Element t = x * of(rows & ~(1u << r), cols & ~(1u << c));
                acc = plus ? acc + t : acc - t;
            }
            plus = !plus;
        }
        memo_.emplace(key, acc);
        return acc;
    }

    // Delta_k = gcd of all k x k minors, k = 1..min(m, n).
    std::vector<Element> determinantal_divisors() {
        const std::size_t m = A_.rows(), n = A_.cols();
        std::vector<Element> out;
        for (std::size_t k = 1; k <= std::min(m, n); ++k) {
            Element g = A_.ring().zero();
            for (std::uint32_t rs = 0; rs < (1u << m); ++rs) {
                if (static_cast<std::size_t>(__builtin_popcount(rs)) != k) continue;
                for (std::uint32_t cs = 0; cs < (1u << n); ++cs)
                    if (static_cast<std::size_t>(__builtin_popcount(cs)) == k) g = gcd(g, of(rs, cs));
            }
            out.push_back(normal(g));
        }
        return out;
    }

private:
    const Matrix& A_;
    std::map<std::uint64_t, Element> memo_;
};

// d_1 * ... * d_k associated to Delta_k for every k. Empty string on
// success, otherwise a description of the first disagreement.
inline std::string diagonal_vs_minors(const Matrix& A, const Matrix& D) {
    auto delta = Minors(A).determinantal_divisors();
    Element prod = A.ring().one();
    for (std::size_t k = 0; k < delta.size(); ++k) {
        prod *= D(k, k);
        if (!associated(prod, delta[k]))
            return "k=" + std::to_string(k + 1) + ": product " + prod.to_string() + " vs gcd of minors " +
                   delta[k].to_string();
    }
    return {};
}

inline Element det(const Matrix& A) {
    Minors m(A);
    const std::uint32_t all = (1u << A.rows()) - 1;
    return m.of(all, all);
}

inline Matrix random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    Matrix M(integers(), rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) M(i, j) = M.ring().from_int(d(rng));
    return M;
}

inline Element random_poly(std::mt19937_64& rng, const Ring& R, int max_degree) {
    std::uniform_int_distribution<std::uint64_t> d(0, R.prime() - 1);
    std::vector<std::uint64_t> c(static_cast<std::size_t>(max_degree + 1));
    for (auto& x : c) x = d(rng);
    return Element(R, Poly(std::move(c)));
}

inline Matrix random_poly_matrix(std::mt19937_64& rng, const Ring& R, std::size_t rows, std::size_t cols,
                                 int max_degree) {
    Matrix M(R, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) M(i, j) = random_poly(rng, R, max_degree);
    return M;
}

// Uniform triple in [lo, hi]^3 with gcd 1.
struct Triple {
    long a, b, c;
};
inline Triple random_comaximal_triple(std::mt19937_64& rng, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    for (;;) {
        Triple t{d(rng), d(rng), d(rng)};
        if (gcd(gcd(Integer(t.a), Integer(t.b)), Integer(t.c)) == 1) return t;
    }
}

// Product of the distinct primes of n, by trial division.
inline long squarefree_kernel(long n) {
    long r = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        r *= p;
        while (n % p == 0) n /= p;
    }
    return n > 1 ? r * n : r;
}

// Small finite rings used by the sweeps, as ring specs.
inline std::vector<std::string> suite_upto_16() {
    std::vector<std::string> s;
    for (int n = 2; n <= 16; ++n) s.push_back("Z/" + std::to_string(n));
    for (const char* r : {"Z/2 x Z/2", "Z/2 x Z/3", "Z/4 x Z/3", "GF(2)[x]/(0,0,1)", "GF(2)[x]/(1,1,1)"})
        s.push_back(r);
    return s;
}

inline std::vector<std::string> product_quotient_suite() {
    return {"Z/2 x Z/2",        "Z/2 x Z/3",        "Z/4 x Z/3",        "Z/4 x Z/9",        "Z/2 x Z/2 x Z/2",
            "Z/3 x Z/5",        "Z/2 x Z/4",        "GF(2)[x]/(0,0,1)", "GF(2)[x]/(1,1,1)", "GF(3)[x]/(0,0,1)",
            "GF(2)[x]/(1,0,0,1)", "GF(2)[x]/(0,0,0,1)", "GF(5)[x]/(0,0,1)", "GF(2)[x]/(1,1) x Z/3"};
}

// Coset quotients of finite rings, built through quotient_ring.
inline std::vector<Ring> coset_quotients() {
    std::vector<Ring> out;
    auto add = [&](const char* spec, const char* elem) {
        Ring R = parse_ring(spec);
        out.push_back(quotient_ring(R, R.parse_element(elem)));
    };
    add("Z/12", "4");
    add("Z/4 x Z/9", "(2|3)");
    add("GF(2)[x]/(0,0,0,1)", "0,0,1");
    add("Z/2 x Z/8", "(1|2)");
    add("Z/36", "6");
    return out;
}

}  // namespace edr::oracle
