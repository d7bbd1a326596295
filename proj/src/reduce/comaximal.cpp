#include "bezout_domain.hpp"
#include "edr/reduce/reduction.hpp"

namespace edr {

namespace {

constexpr std::uint64_t kCompletionScan = 64;

void require_comaximal(const Element& a, const Element& b, const Element& c) {
    const Element triple[] = {a, b, c};
    if (!is_comaximal(a.ring(), triple)) throw PreconditionError("triple not comaximal");
}

}  // namespace

DiademStep diadem_step(const Element& a, const Element& b, const Element& c) {
    require_bezout_domain(a.ring());
    require_comaximal(a, b, c);
    auto cert = bezout_gcd(a, c);
    auto witness = find_diadem(b, cert.g);
    Element x = witness.lambda * cert.u;
    Element y = witness.lambda * cert.v;
    Element w = b + a * x + c * y;
    return {std::move(x), std::move(y), std::move(w), std::move(witness)};
}

Element comaximal_completion(const Element& alpha, const Element& c, const Element& d) {
    const Ring& R = alpha.ring();
    require_bezout_domain(R);
    require_comaximal(alpha, c, d);
    auto k = bezout_gcd(c, d);
    if (k.g.is_zero()) return R.zero();  // c = d = 0, so alpha is a unit
    const Element& c1 = k.a1;
    const Element& d1 = k.b1;

    for (std::uint64_t i = 0; i < kCompletionScan; ++i) {
        Element mu = search_candidate(R, i);
        if (coprime(alpha, c1 + d1 * mu)) return mu;
    }
    if (alpha.is_zero()) throw PreconditionError("no completion: alpha = 0 and no c + d*mu in the search range is a unit");

    // Keep the part of alpha coprime to c1. Every prime of alpha then
    // divides exactly one of c1 and mu, so it cannot divide c1 + d1*mu.
    Element mu = alpha;
    for (;;) {
        Element g = bezout_gcd(mu, c1).g;
        if (is_unit(g)) break;
        mu = *divides(g, mu);
    }
    if (!coprime(alpha, c1 + d1 * mu)) throw Error("internal: comaximal completion failed");
    return mu;
}

ReductionCertificate reduce_2x2_comaximal(const Matrix& A) {
    const Ring& R = A.ring();
    require_bezout_domain(R);
    if (A.rows() != 2 || A.cols() != 2 || !A(0, 1).is_zero())
        throw PreconditionError("expected a 2x2 matrix of the form [[a, 0], [b, c]]");
    const Element &a = A(0, 0), &b = A(1, 0), &c = A(1, 1);
    require_comaximal(a, b, c);
    const Element one = R.one(), zero = R.zero();

    if (b.is_zero() && is_unit(a)) {
        Element n = normalizing_unit(c);
        Matrix P = mat2(*inverse(a), zero, zero, n);
        return {P, P * A, Matrix::identity(R, 2)};
    }

    // [[1,0],[x,1]] A [[1,0],[y,1]] = [[a,0],[w,c]], w a diadem
    auto step = diadem_step(a, b, c);
    Matrix L1 = mat2(one, zero, step.x, one);
    Matrix R1 = mat2(one, zero, step.y, one);
    Matrix M = L1 * A * R1;

    // (w, c) Q2 = (alpha, 0); the swap gives [[a', c'], [0, alpha]]
    auto h = hermite_reduce_1x2(step.w, c);
    Matrix S = mat2(zero, one, one, zero);
    M = M * h.Q * S;
    const Element alpha = M(1, 1);

    // alpha divides the diadem w, so the top row completes against it
    Element mu = comaximal_completion(alpha, M(0, 1), M(0, 0));
    Matrix T = mat2(mu, one, one, zero);
    M = M * T;  // [[c' + a'mu, a'], [alpha, 0]]

    auto col = hermite_reduce_2x1(M(0, 0), M(1, 0));
    M = col.P * M;  // [[1, beta], [0, gamma]]
    if (!(M(0, 0) == one)) throw Error("internal: corner did not become 1");

    Matrix C5 = mat2(one, -M(0, 1), zero, one);
    M = M * C5;
    Matrix N = mat2(one, zero, zero, normalizing_unit(M(1, 1)));

    ReductionCertificate cert{N * col.P * L1, N * M, R1 * h.Q * S * T * C5};
    if (!(cert.P * A * cert.Q == cert.D)) throw Error("internal: 2x2 certificate does not reproduce D");
    return cert;
}

}  // namespace edr
