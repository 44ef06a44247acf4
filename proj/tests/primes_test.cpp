#include "doctest.h"

#include <stdexcept>

#include "benelux/primes.hpp"

using benelux::primes_up_to;

namespace {

bool is_prime_by_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("small prime lists") {
  CHECK(primes_up_to(10).primes == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(0).empty());
  CHECK(primes_up_to(2).primes == std::vector<std::uint64_t>{2});
  CHECK(primes_up_to(3).primes == std::vector<std::uint64_t>{2, 3});
}

TEST_CASE("primes up to 2^16 match trial division") {
  const auto primes = primes_up_to(65536);
  std::size_t expected = 0;
  for (std::uint64_t n = 0; n <= 65536; ++n) expected += is_prime_by_trial(n) ? 1 : 0;
  CHECK(expected == 6542);
  CHECK(primes.size() == 6542);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    REQUIRE(is_prime_by_trial(primes[i]));
    if (i > 0) REQUIRE(primes[i - 1] < primes[i]);
  }
}

TEST_CASE("prime count is non-decreasing in the limit") {
  std::size_t previous = 0;
  for (std::uint64_t limit = 0; limit < 2000; ++limit) {
    const auto count = primes_up_to(limit).size();
    REQUIRE(count >= previous);
    REQUIRE(count - previous == (is_prime_by_trial(limit) ? 1u : 0u));
    previous = count;
  }
}

TEST_CASE("isqrt is exact") {
  using benelux::isqrt;
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(15) == 3);
  CHECK(isqrt(16) == 4);
  CHECK(isqrt(UINT64_MAX) == 0xffffffffULL);
  CHECK(isqrt(0xfffffffe00000001ULL) == 0xffffffffULL);
  CHECK(isqrt(0xfffffffe00000000ULL) == 0xfffffffeULL);
  for (std::uint64_t r = 1; r < 100000; r += 7) {
    REQUIRE(isqrt(r * r) == r);
    REQUIRE(isqrt(r * r - 1) == r - 1);
  }
}
