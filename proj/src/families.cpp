#include "benelux/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "benelux/radical.hpp"

namespace benelux {
namespace {

constexpr unsigned kMaxFamilyK = 31;

BeneluxPair with_radicals(std::uint64_t m, std::uint64_t n, PairKind kind,
                          std::uint64_t rad_m, std::uint64_t rad_m1) {
  return BeneluxPair{m, n, kind, rad_m, rad_m1};
}

}  // namespace

std::vector<BeneluxPair> KnownSolutionSet::all() const {
  std::vector<BeneluxPair> out(first_kind);
  out.insert(out.end(), second_kind.begin(), second_kind.end());
  sort_by_m(out);
  return out;
}

std::pair<std::uint64_t, std::uint64_t> family_first_kind(unsigned k) {
  if (k < 2) throw std::invalid_argument("first-kind family needs k >= 2");
  if (k > kMaxFamilyK) throw std::overflow_error("first-kind family member k=" + std::to_string(k) + " overflows 64 bits");
  const std::uint64_t m = (std::uint64_t{1} << k) - 2;
  return {m, (std::uint64_t{1} << (2 * k)) - (std::uint64_t{1} << (k + 1))};
}

std::pair<std::uint64_t, std::uint64_t> family_second_kind(unsigned k) {
  if (k > kMaxFamilyK) throw std::overflow_error("second-kind family member k=" + std::to_string(k) + " overflows 64 bits");
  const std::uint64_t m = (std::uint64_t{1} << k) + 1;
  return {m, (std::uint64_t{1} << (2 * k)) + (std::uint64_t{1} << (k + 1))};
}

std::vector<BeneluxPair> exceptional_pairs() {
  // 75 = 3*5^2, 76 = 2^2*19, 1215 = 3^5*5, 1216 = 2^6*19.
  // 35 = 5*7, 36 = 2^2*3^2, 4374 = 2*3^7, 4375 = 5^4*7.
  return {with_radicals(75, 1215, PairKind::First, 15, 38),
          with_radicals(35, 4374, PairKind::Second, 35, 6)};
}

KnownSolutionSet expected_pairs_up_to(std::uint64_t limit) {
  if (limit > kCompletenessBound) {
    throw std::invalid_argument("completeness unknown beyond " + std::to_string(kCompletenessBound));
  }
  KnownSolutionSet known;
  known.limit = limit;

  for (unsigned k = 2; k <= kMaxFamilyK; ++k) {
    const auto [m, n] = family_first_kind(k);
    if (n >= limit) break;
    known.first_kind.push_back(with_radicals(m, n, PairKind::First, radical_oracle(m), radical_oracle(m + 1)));
  }
  for (unsigned k = 0; k <= kMaxFamilyK; ++k) {
    const auto [m, n] = family_second_kind(k);
    if (n >= limit) break;
    known.second_kind.push_back(with_radicals(m, n, PairKind::Second, radical_oracle(m), radical_oracle(m + 1)));
  }
  for (const auto& pair : exceptional_pairs()) {
    if (pair.n >= limit) continue;
    (pair.kind == PairKind::First ? known.first_kind : known.second_kind).push_back(pair);
  }
  sort_by_n(known.first_kind);
  sort_by_n(known.second_kind);
  return known;
}

}  // namespace benelux
