#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace benelux {

// The unordered set {rad(n), rad(n+1)}, stored as (min, max). Ordering is
// lexicographic on (lo, hi).
struct PairSignature {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  friend constexpr auto operator<=>(const PairSignature&, const PairSignature&) = default;
};

enum class PairKind : int { First = 1, Second = 2 };

std::string_view to_string(PairKind kind);

// First kind:  rad(m) == rad(n)   and rad(m+1) == rad(n+1).
// Second kind: rad(m) == rad(n+1) and rad(m+1) == rad(n).
struct BeneluxPair {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  PairKind kind = PairKind::First;
  std::uint64_t rad_m = 0;
  std::uint64_t rad_m_plus_1 = 0;

  friend constexpr bool operator==(const BeneluxPair&, const BeneluxPair&) = default;
};

constexpr PairSignature signature_of(std::uint64_t /*n*/, std::uint64_t rad_n,
                                     std::uint64_t rad_n1) {
  return rad_n < rad_n1 ? PairSignature{rad_n, rad_n1} : PairSignature{rad_n1, rad_n};
}

constexpr std::strong_ordering compare(const PairSignature& a, const PairSignature& b) {
  return a <=> b;
}

// Pair (m, n), m < n, or nullopt when the radicals match neither kind.
constexpr std::optional<BeneluxPair> classify(std::uint64_t m, std::uint64_t n,
                                              std::uint64_t rad_m, std::uint64_t rad_m1,
                                              std::uint64_t rad_n, std::uint64_t rad_n1) {
  if (rad_m == rad_n && rad_m1 == rad_n1) return BeneluxPair{m, n, PairKind::First, rad_m, rad_m1};
  if (rad_m == rad_n1 && rad_m1 == rad_n) return BeneluxPair{m, n, PairKind::Second, rad_m, rad_m1};
  return std::nullopt;
}

// Orders by (m, n, kind).
bool less_by_m(const BeneluxPair& a, const BeneluxPair& b);
// Orders by (n, m, kind).
bool less_by_n(const BeneluxPair& a, const BeneluxPair& b);

void sort_by_m(std::vector<BeneluxPair>& pairs);
void sort_by_n(std::vector<BeneluxPair>& pairs);

}  // namespace benelux
