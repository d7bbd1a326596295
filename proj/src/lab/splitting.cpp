#include <algorithm>

#include "edr/lab/diadem.hpp"

namespace edr {

namespace {

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

std::vector<Integer> positive_divisors(const Integer& m) {
    std::vector<Integer> small, large;
    for (Integer i = 1; i * i <= m; ++i) {
        if (!mpz_divisible_p(m.get_mpz_t(), i.get_mpz_t())) continue;
        small.push_back(i);
        Integer j = m / i;
        if (j != i) large.push_back(j);
    }
    std::reverse(large.begin(), large.end());
    small.insert(small.end(), large.begin(), large.end());
    return small;
}

}  // namespace

CoprimeSplitting find_coprime_splitting(const Integer& c, const Integer& a, const Integer& b) {
    if (c == 0) throw PreconditionError("coprime splitting requires c != 0");
    if (gcd(gcd(a, b), c) != 1) throw PreconditionError("gcd(a, b, c) must be 1");
    const auto divisors = positive_divisors(abs(c));
    for (const auto& r : divisors) {
        Integer s = c / r;
        if (gcd(r, s) == 1 && gcd(r, a) == 1 && gcd(s, b) == 1) return {c, r, s};
    }
    throw SplittingNotFound("no coprime splitting of " + c.get_str(), divisors);
}

}  // namespace edr
