#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "benelux/signatures.hpp"

namespace benelux {

// Below this bound the parametric families plus the two exceptional pairs
// are known to be every Benelux pair of either kind.
inline constexpr std::uint64_t kCompletenessBound = 1'400'000'000'000ULL;

struct KnownSolutionSet {
  std::uint64_t limit = 0;
  std::vector<BeneluxPair> first_kind;
  std::vector<BeneluxPair> second_kind;

  // Both kinds, sorted by (m, n).
  std::vector<BeneluxPair> all() const;
};

// m = 2^k - 2, n = 2^(2k) - 2^(k+1) = m(m + 2), for 2 <= k <= 31.
std::pair<std::uint64_t, std::uint64_t> family_first_kind(unsigned k);

// m = 2^k + 1, n = 2^(2k) + 2^(k+1) = m^2 - 1, for 0 <= k <= 31.
std::pair<std::uint64_t, std::uint64_t> family_second_kind(unsigned k);

// (75, 1215) of the first kind and (35, 4374) of the second.
std::vector<BeneluxPair> exceptional_pairs();

// Every known pair with n < limit, each kind sorted by n. Throws
// std::invalid_argument past kCompletenessBound.
KnownSolutionSet expected_pairs_up_to(std::uint64_t limit);

}  // namespace benelux
