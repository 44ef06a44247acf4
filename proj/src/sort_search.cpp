#include "benelux/sort_search.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <thread>

#include "benelux/radical.hpp"

namespace benelux {
namespace {

bool record_less(const SignatureRecord& a, const SignatureRecord& b) {
  if (a.sig != b.sig) return a.sig < b.sig;
  return a.n < b.n;
}

// Sorts pieces concurrently then merges them; (sig, n) is a strict total
// order so the result does not depend on the split.
void parallel_sort(std::vector<SignatureRecord>& records, unsigned threads) {
  const std::size_t size = records.size();
  const std::size_t pieces = std::min<std::size_t>(std::max(threads, 1u), std::max<std::size_t>(1, size / 4096));
  if (pieces <= 1) {
    std::sort(records.begin(), records.end(), record_less);
    return;
  }
  std::vector<std::size_t> bounds(pieces + 1);
  for (std::size_t i = 0; i <= pieces; ++i) bounds[i] = size * i / pieces;
  {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < pieces; ++i) {
      pool.emplace_back([&, i] {
        std::sort(records.begin() + bounds[i], records.begin() + bounds[i + 1], record_less);
      });
    }
  }
  for (std::size_t width = 1; width < pieces; width *= 2) {
    for (std::size_t i = 0; i + width < pieces; i += 2 * width) {
      const std::size_t hi = std::min(i + 2 * width, pieces);
      std::inplace_merge(records.begin() + bounds[i], records.begin() + bounds[i + width],
                         records.begin() + bounds[hi], record_less);
    }
  }
}

}  // namespace

std::uint64_t sort_search_bytes(std::uint64_t limit) {
  constexpr std::uint64_t per = sizeof(std::uint64_t) + sizeof(SignatureRecord);
  if (limit > std::numeric_limits<std::uint64_t>::max() / per) return std::numeric_limits<std::uint64_t>::max();
  return limit * per;
}

std::vector<BeneluxPair> find_pairs_sorted(std::uint64_t limit, const PrimeList& primes,
                                           const SortSearchOptions& options) {
  if (limit < 3) throw std::invalid_argument("find_pairs_sorted: limit must be >= 3");
  const std::uint64_t bytes = sort_search_bytes(limit);
  if (bytes > options.memory_budget_bytes) {
    throw MemoryBudgetExceeded("sort search for limit " + std::to_string(limit) + " needs " +
                               std::to_string(bytes) + " bytes, budget is " +
                               std::to_string(options.memory_budget_bytes) +
                               "; use chunked search");
  }

  // rad(n) for n in [1, limit], so rad(n+1) exists for every n < limit.
  const RadicalSegment rads = sieve_radicals(Interval{1, limit}, primes, options.threads);
  const auto rad = [&](std::uint64_t n) { return rads.values[n - 1]; };

  std::vector<SignatureRecord> records(limit - 1);
  for (std::uint64_t n = 1; n < limit; ++n) {
    records[n - 1] = {n, signature_of(n, rad(n), rad(n + 1))};
  }
  parallel_sort(records, options.threads);

  // Every pair inside a run of equal signatures, not only neighbours.
  std::vector<BeneluxPair> found;
  for (std::size_t begin = 0; begin < records.size();) {
    std::size_t end = begin + 1;
    while (end < records.size() && records[end].sig == records[begin].sig) ++end;
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = i + 1; j < end; ++j) {
        const std::uint64_t m = records[i].n;
        const std::uint64_t n = records[j].n;
        if (auto pair = classify(m, n, rad(m), rad(m + 1), rad(n), rad(n + 1))) found.push_back(*pair);
      }
    }
    begin = end;
  }
  sort_by_m(found);
  return found;
}

}  // namespace benelux
