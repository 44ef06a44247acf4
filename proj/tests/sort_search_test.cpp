#include "doctest.h"

#include <stdexcept>

#include <set>
#include <tuple>

#include "benelux/oracle.hpp"
#include "benelux/primes.hpp"
#include "benelux/radical.hpp"
#include "benelux/sort_search.hpp"

using namespace benelux;

namespace {

using Key = std::tuple<std::uint64_t, std::uint64_t, int>;

std::vector<Key> keys(const std::vector<BeneluxPair>& pairs, std::optional<PairKind> only = {}) {
  std::vector<Key> out;
  for (const auto& p : pairs) {
    if (!only || p.kind == *only) out.emplace_back(p.m, p.n, static_cast<int>(p.kind));
  }
  return out;
}

}  // namespace

TEST_CASE("brute-force reference against frozen values") {
  // Frozen from an independent computation (sympy primefactors, double loop).
  const auto pairs = brute_force_pairs(1300);
  CHECK(keys(pairs, PairKind::First) ==
        std::vector<Key>{{2, 8, 1}, {6, 48, 1}, {14, 224, 1}, {30, 960, 1}, {75, 1215, 1}});
  CHECK(keys(pairs, PairKind::Second) ==
        std::vector<Key>{{2, 3, 2}, {3, 8, 2}, {5, 24, 2}, {9, 80, 2}, {17, 288, 2}, {33, 1088, 2}});
}

TEST_CASE("find_pairs_sorted small limits") {
  const auto primes = primes_up_to(100);
  const auto at10 = find_pairs_sorted(10, primes);
  CHECK(keys(at10, PairKind::First) == std::vector<Key>{{2, 8, 1}});
  CHECK(keys(at10, PairKind::Second) == std::vector<Key>{{2, 3, 2}, {3, 8, 2}});
  CHECK(keys(at10) == std::vector<Key>{{2, 3, 2}, {2, 8, 1}, {3, 8, 2}});

  CHECK(keys(find_pairs_sorted(1300, primes), PairKind::First) ==
        std::vector<Key>{{2, 8, 1}, {6, 48, 1}, {14, 224, 1}, {30, 960, 1}, {75, 1215, 1}});
  // n < limit is strict.
  CHECK(keys(find_pairs_sorted(1215, primes), PairKind::First).back() == Key{30, 960, 1});
  CHECK(keys(find_pairs_sorted(1216, primes), PairKind::First).back() == Key{75, 1215, 1});
  CHECK(find_pairs_sorted(3, primes).empty());
  CHECK(keys(find_pairs_sorted(4, primes)) == std::vector<Key>{{2, 3, 2}});
}

TEST_CASE("find_pairs_sorted equals brute force for many limits up to 20000") {
  const auto primes = primes_up_to(200);
  const auto reference = brute_force_pairs(20000);
  for (std::uint64_t limit : {3u, 5u, 9u, 24u, 25u, 81u, 289u, 1089u, 4375u, 4376u, 12345u, 20000u}) {
    std::vector<BeneluxPair> expect;
    for (const auto& p : reference) {
      if (p.n < limit) expect.push_back(p);
    }
    INFO("limit = " << limit);
    REQUIRE(find_pairs_sorted(limit, primes) == expect);
  }
}

TEST_CASE("sorted output is duplicate-free, verified and monotone in the limit") {
  const auto primes = primes_up_to(2000);
  const auto small = find_pairs_sorted(100000, primes);
  const auto large = find_pairs_sorted(3'000'000, primes, {.threads = 4});
  std::set<Key> seen;
  for (const auto& p : large) {
    REQUIRE(seen.insert({p.m, p.n, static_cast<int>(p.kind)}).second);
    const auto again = classify(p.m, p.n, radical_oracle(p.m), radical_oracle(p.m + 1),
                                radical_oracle(p.n), radical_oracle(p.n + 1));
    REQUIRE(again);
    REQUIRE(again->kind == p.kind);
  }
  for (const auto& p : small) REQUIRE(seen.count({p.m, p.n, static_cast<int>(p.kind)}) == 1);
}

TEST_CASE("thread count does not change the sorted result") {
  const auto primes = primes_up_to(2000);
  CHECK(find_pairs_sorted(500000, primes, {.threads = 1}) ==
        find_pairs_sorted(500000, primes, {.threads = 7}));
}

TEST_CASE("find_pairs_sorted errors") {
  const auto primes = primes_up_to(100);
  CHECK_THROWS_AS(find_pairs_sorted(2, primes), std::invalid_argument);
  CHECK_THROWS_AS(find_pairs_sorted(1'000'000, primes, {.threads = 1, .memory_budget_bytes = 1000}),
                  MemoryBudgetExceeded);
  CHECK_THROWS_AS(find_pairs_sorted(1'000'000, primes_up_to(10)), std::invalid_argument);
}
