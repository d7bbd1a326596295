#include "bezout_domain.hpp"
#include "edr/reduce/reduction.hpp"

namespace edr {

void require_bezout_domain(const Ring& ring) {
    if (ring.kind() != RingKind::Integers && ring.kind() != RingKind::PolynomialsOverPrimeField)
        throw UnsupportedRing("producer requires a Bezout domain (Z or GF(p)[x]), got " + ring.spec());
}

bool coprime(const Element& a, const Element& b) { return is_unit(bezout_gcd(a, b).g); }

HermiteRow hermite_reduce_1x2(const Element& a, const Element& b) {
    const Ring& R = a.ring();
    require_bezout_domain(R);
    if (a.is_zero() && b.is_zero()) return {Matrix::identity(R, 2), R.zero()};
    auto cert = bezout_gcd(a, b);
    Matrix Q(R, 2, 2);
    Q(0, 0) = cert.u;
    Q(0, 1) = -cert.b1;
    Q(1, 0) = cert.v;
    Q(1, 1) = cert.a1;
    return {std::move(Q), cert.g};
}

HermiteColumn hermite_reduce_2x1(const Element& a, const Element& b) {
    auto row = hermite_reduce_1x2(a, b);
    return {row.Q.transpose(), row.g};
}

}  // namespace edr
