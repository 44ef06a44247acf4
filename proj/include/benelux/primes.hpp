#pragma once

#include <cstdint>
#include <vector>

namespace benelux {

// Ascending list of every prime <= limit. Immutable once built.
struct PrimeList {
  std::vector<std::uint64_t> primes;
  std::uint64_t limit = 0;

  std::size_t size() const { return primes.size(); }
  bool empty() const { return primes.empty(); }
  auto begin() const { return primes.begin(); }
  auto end() const { return primes.end(); }
  std::uint64_t operator[](std::size_t i) const { return primes[i]; }
};

// Bit-array sieve of Eratosthenes over [2, limit].
PrimeList primes_up_to(std::uint64_t limit);

// floor(sqrt(n)), exact for all 64-bit n.
std::uint64_t isqrt(std::uint64_t n);

// Primes sufficient to sieve radicals of every integer <= endpoint.
PrimeList primes_for_endpoint(std::uint64_t endpoint);

}  // namespace benelux
