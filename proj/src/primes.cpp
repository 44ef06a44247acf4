#include "benelux/primes.hpp"

#include <cmath>
#include <stdexcept>

namespace benelux {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && (r > UINT32_MAX || r * r > n)) --r;
  while (r + 1 <= UINT32_MAX && (r + 1) * (r + 1) <= n) ++r;
  return r;
}

PrimeList primes_up_to(std::uint64_t limit) {
  PrimeList out;
  out.limit = limit;
  if (limit < 2) return out;
  if (limit > (std::uint64_t{1} << 40)) {
    throw std::invalid_argument("primes_up_to: limit too large for an in-memory sieve");
  }

  // Odd numbers only: bit i stands for 2i+1.
  const std::uint64_t half = limit / 2 + 1;
  std::vector<bool> composite(half, false);
  for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    for (std::uint64_t j = p * p / 2; j < half; j += p) composite[j] = true;
  }

  out.primes.push_back(2);
  for (std::uint64_t i = 1; i < half; ++i) {
    const std::uint64_t v = 2 * i + 1;
    if (v > limit) break;
    if (!composite[i]) out.primes.push_back(v);
  }
  return out;
}

PrimeList primes_for_endpoint(std::uint64_t endpoint) {
  return primes_up_to(isqrt(endpoint));
}

}  // namespace benelux
