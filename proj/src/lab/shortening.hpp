#pragma once

#include <vector>

#include "edr/lab/finite_ring.hpp"

namespace edr::detail {

/// For each (x, y), the distinct ideals (x + y*t)R as t ranges over R,
/// stored at x*n + y.
std::vector<std::vector<FiniteRing::IdealId>> shortening_sets(const FiniteRing& R);

/// comaximal_ideals[i*k + j] iff I_i + I_j = R.
std::vector<char> comaximal_ideals(const FiniteRing& R);

}  // namespace edr::detail
