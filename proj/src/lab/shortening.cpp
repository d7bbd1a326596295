#include "shortening.hpp"

#include <algorithm>

namespace edr::detail {

std::vector<std::vector<FiniteRing::IdealId>> shortening_sets(const FiniteRing& R) {
    using Index = FiniteRing::Index;
    const std::size_t n = R.size();
    std::vector<std::vector<FiniteRing::IdealId>> out(n * n);
    std::vector<char> seen(R.ideal_count());
    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
            std::fill(seen.begin(), seen.end(), 0);
            auto& ids = out[x * n + y];
            for (Index t = 0; t < n; ++t) {
                auto id = R.principal(R.add(x, R.mul(y, t)));
                if (!seen[id]) {
                    seen[id] = 1;
                    ids.push_back(id);
                }
            }
        }
    }
    return out;
}

std::vector<char> comaximal_ideals(const FiniteRing& R) {
    const std::size_t k = R.ideal_count();
    std::vector<char> out(k * k);
    for (FiniteRing::IdealId i = 0; i < k; ++i)
        for (FiniteRing::IdealId j = 0; j < k; ++j) out[i * k + j] = R.sum(i, j) == R.whole();
    return out;
}

}  // namespace edr::detail
