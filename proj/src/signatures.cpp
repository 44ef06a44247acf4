#include "benelux/signatures.hpp"

#include <algorithm>
#include <tuple>

namespace benelux {

std::string_view to_string(PairKind kind) {
  return kind == PairKind::First ? "first" : "second";
}

bool less_by_m(const BeneluxPair& a, const BeneluxPair& b) {
  return std::tuple(a.m, a.n, static_cast<int>(a.kind)) <
         std::tuple(b.m, b.n, static_cast<int>(b.kind));
}

bool less_by_n(const BeneluxPair& a, const BeneluxPair& b) {
  return std::tuple(a.n, a.m, static_cast<int>(a.kind)) <
         std::tuple(b.n, b.m, static_cast<int>(b.kind));
}

void sort_by_m(std::vector<BeneluxPair>& pairs) { std::sort(pairs.begin(), pairs.end(), less_by_m); }

void sort_by_n(std::vector<BeneluxPair>& pairs) { std::sort(pairs.begin(), pairs.end(), less_by_n); }

}  // namespace benelux
