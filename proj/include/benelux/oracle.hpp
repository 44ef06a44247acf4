#pragma once

#include <cstdint>
#include <vector>

#include "benelux/signatures.hpp"

namespace benelux {

using RadicalFunction = std::uint64_t (*)(std::uint64_t);

// Quadratic reference search: compares the radicals of every 1 <= m < n < limit
// directly. Only meant for small limits. Sorted by (m, n, kind).
std::vector<BeneluxPair> brute_force_pairs(std::uint64_t limit,
                                           RadicalFunction radical = nullptr);

}  // namespace benelux
