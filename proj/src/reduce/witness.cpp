#include "bezout_domain.hpp"
#include "edr/lab/properties.hpp"
#include "edr/reduce/reduction.hpp"

namespace edr {

SR2Witness stable_range_2_witness(const Element& a, const Element& b, const Element& c) {
    const Ring& R = a.ring();
    require_bezout_domain(R);
    const Element triple[] = {a, b, c};
    if (!is_comaximal(R, triple)) throw PreconditionError("triple not comaximal");

    // d = gcd(b, c); nu = a + d*lambda = a + b*x + c*y is a diadem
    auto bc = bezout_gcd(b, c);
    auto nu = find_diadem(a, bc.g);
    const Element x = nu.lambda * bc.u;
    const Element y = nu.lambda * bc.v;

    // nu is a diadem and (nu, b, c) is comaximal, so b shortens against it
    const Element mu = comaximal_completion(nu.diadem, b, c);
    auto st = bezout_gcd(nu.diadem, b + c * mu);
    const Element& s = st.u;
    const Element& t = st.v;

    // a*s + b*(x*s + t) + c*(y*s + mu*t) = 1 and (s, x*s + t) comaximal
    const Element second = x * s + t;
    const Element third = y * s + mu * t;
    auto ef = bezout_gcd(s, second);
    if (!is_unit(ef.g)) throw Error("internal: cofactors not comaximal");
    const Element ginv = *inverse(ef.g);
    const Element p = ef.u * ginv * third;
    const Element q = ef.v * ginv * third;

    if (!coprime(a + c * p, b + c * q)) throw Error("internal: stable range 2 witness failed");
    return {a, b, c, p, q};
}

GelfandWitness gelfand_range_1_witness(const Integer& a, const Integer& b, const DiademOptions& options) {
    const Ring Z = integers();
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (g != 1) throw PreconditionError("pair not comaximal");
    for (std::uint64_t k = 0; k < options.search_radius; ++k) {
        const Element lambda = search_candidate(Z, k);
        const Integer m = a + b * lambda.integer();
        if (m == 0) continue;
        auto verdict = decide_on_finite_ring(quotient_ring(Z, Z.from_integer(m)), Property::Gelfand,
                                             options.exhaustive_bound);
        if (verdict.holds) return {lambda.integer(), m, verdict.exhaustive};
    }
    throw Error("Gelfand search exhausted after " + std::to_string(options.search_radius) + " candidates");
}

}  // namespace edr
