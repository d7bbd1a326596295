#include "edr/reduce/verify.hpp"

#include <bit>
#include <cstdint>

namespace edr {

namespace {

// Deliberately shares nothing with the producer: plain triple loop and a
// Laplace expansion along rows, memoized over column subsets. No division,
// so it is valid over rings with zero divisors.
Matrix multiply(const Matrix& a, const Matrix& b) {
    Matrix out(a.ring(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Element s = a.ring().zero();
            for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
            out(i, j) = s;
        }
    return out;
}

Element cofactor_determinant(const Matrix& m) {
    const std::size_t n = m.rows();
    if (n > 24) throw UnsupportedRing("verifier determinant limited to 24x24");
    const Ring& R = m.ring();
    // minor[S] = det of rows 0..|S|-1 against the columns in S
    std::vector<Element> minor(std::size_t{1} << n, R.zero());
    minor[0] = R.one();
    for (std::uint32_t S = 1; S < (1u << n); ++S) {
        const std::size_t row = static_cast<std::size_t>(std::popcount(S)) - 1;
        Element acc = R.zero();
        int sign_pos = 0;  // columns of S below j
        for (std::size_t j = 0; j < n; ++j) {
            if (!(S >> j & 1u)) continue;
            const Element& x = m(row, j);
            if (!x.is_zero()) {
                // column j is the (sign_pos)-th of S; expanding along the last
                // row gives sign (-1)^(row + sign_pos)
                Element term = x * minor[S & ~(1u << j)];
                if ((row + static_cast<std::size_t>(sign_pos)) % 2) acc -= term;
                else acc += term;
            }
            ++sign_pos;
        }
        minor[S] = acc;
    }
    return minor[(std::size_t{1} << n) - 1];
}

bool normalized(const Element& x) {
    switch (x.ring().kind()) {
        case RingKind::Integers: return sgn(x.integer()) >= 0;
        case RingKind::PolynomialsOverPrimeField: return x.is_zero() || x.poly().lead() == 1;
        default: return true;
    }
}

VerifyResult fail(std::string clause, std::string detail) { return {false, std::move(clause), std::move(detail)}; }

std::string at(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

VerifyResult verify_certificate(const Matrix& A, const ReductionCertificate& cert) {
    const auto& [P, D, Q] = cert;
    const Ring& R = A.ring();
    if (!(P.ring() == R) || !(D.ring() == R) || !(Q.ring() == R)) throw RingMismatch();
    const std::size_t m = A.rows(), n = A.cols();
    if (P.rows() != m || P.cols() != m || D.rows() != m || D.cols() != n || Q.rows() != n || Q.cols() != n)
        throw ShapeMismatch("certificate shapes do not match a " + std::to_string(m) + "x" + std::to_string(n) +
                            " matrix");

    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && !D(i, j).is_zero()) return fail("diagonal", "nonzero off-diagonal entry at " + at(i, j));

    const std::size_t k = std::min(m, n);
    for (std::size_t i = 0; i + 1 < k; ++i)
        if (!divides(D(i, i), D(i + 1, i + 1)))
            return fail("chain", D(i, i).to_string() + " does not divide " + D(i + 1, i + 1).to_string());

    for (std::size_t i = 0; i < k; ++i)
        if (!normalized(D(i, i))) return fail("normalization", "entry " + at(i, i) + " = " + D(i, i).to_string());

    const Matrix PAQ = multiply(multiply(P, A), Q);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!(PAQ(i, j) == D(i, j)))
                return fail("product", "P*A*Q differs from D at " + at(i, j) + ": " + PAQ(i, j).to_string() +
                                           " vs " + D(i, j).to_string());

    const Element dp = cofactor_determinant(P);
    if (!is_unit(dp)) return fail("unit-determinant", "det P = " + dp.to_string());
    const Element dq = cofactor_determinant(Q);
    if (!is_unit(dq)) return fail("unit-determinant", "det Q = " + dq.to_string());
    return {};
}

}  // namespace edr
