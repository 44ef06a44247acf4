#include "benelux/oracle.hpp"

#include "benelux/radical.hpp"

namespace benelux {

std::vector<BeneluxPair> brute_force_pairs(std::uint64_t limit, RadicalFunction radical) {
  if (radical == nullptr) radical = radical_oracle;
  std::vector<BeneluxPair> out;
  if (limit < 3) return out;
  std::vector<std::uint64_t> rad(limit + 1);
  for (std::uint64_t n = 1; n <= limit; ++n) rad[n] = radical(n);

  for (std::uint64_t m = 1; m < limit; ++m) {
    for (std::uint64_t n = m + 1; n < limit; ++n) {
      if (rad[m] == rad[n] && rad[m + 1] == rad[n + 1]) {
        out.push_back({m, n, PairKind::First, rad[m], rad[m + 1]});
      }
      if (rad[m] == rad[n + 1] && rad[m + 1] == rad[n]) {
        out.push_back({m, n, PairKind::Second, rad[m], rad[m + 1]});
      }
    }
  }
  return out;
}

}  // namespace benelux
