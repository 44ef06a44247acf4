#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "benelux/primes.hpp"
#include "benelux/signatures.hpp"

namespace benelux {

struct SignatureRecord {
  std::uint64_t n = 0;
  PairSignature sig;
};

inline constexpr std::uint64_t kDefaultSortMemoryBudget = std::uint64_t{4} << 30;

struct SortSearchOptions {
  unsigned threads = 1;
  std::uint64_t memory_budget_bytes = kDefaultSortMemoryBudget;
};

// Thrown when the in-memory record array would not fit the budget. The
// chunked search is the way forward at that size.
class MemoryBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bytes held at peak by find_pairs_sorted for this limit.
std::uint64_t sort_search_bytes(std::uint64_t limit);

// All Benelux pairs of both kinds with m < n < limit, sorted by (m, n).
// `primes` must cover sqrt(limit).
std::vector<BeneluxPair> find_pairs_sorted(std::uint64_t limit, const PrimeList& primes,
                                           const SortSearchOptions& options = {});

}  // namespace benelux
