#include "doctest.h"

#include <stdexcept>

#include <numeric>
#include <random>

#include "benelux/radical.hpp"

using namespace benelux;

namespace {

bool squarefree(std::uint64_t v) {
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % (d * d) == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("radical oracle on known values") {
  CHECK(radical_oracle(1) == 1);
  CHECK(radical_oracle(75) == 15);
  CHECK(radical_oracle(1216) == 38);
  CHECK(radical_oracle(1215) == 15);
  CHECK(radical_oracle(4374) == 6);
  CHECK(radical_oracle(4375) == 35);
  CHECK(radical_oracle(1ULL << 63) == 2);
  CHECK(radical_oracle(1'000'000'007ULL) == 1'000'000'007ULL);
  CHECK_THROWS_AS(radical_oracle(0), std::invalid_argument);
}

TEST_CASE("radical oracle properties") {
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    const auto r = radical_oracle(n);
    REQUIRE(n % r == 0);
    REQUIRE(squarefree(r));
    REQUIRE((r == n) == squarefree(n));
  }
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 8191ULL, 65537ULL}) {
    std::uint64_t power = p;
    for (int k = 1; power <= UINT64_MAX / p / p; ++k, power *= p) REQUIRE(radical_oracle(power) == p);
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t a = rng() % 100000 + 1;
    const std::uint64_t b = rng() % 100000 + 1;
    if (std::gcd(a, b) != 1) continue;
    REQUIRE(radical_oracle(a * b) == radical_oracle(a) * radical_oracle(b));
  }
}

TEST_CASE("sieve_radicals small intervals") {
  const auto primes = primes_up_to(1000);
  CHECK(sieve_radicals({1, 10}, primes).values ==
        std::vector<std::uint64_t>{1, 2, 3, 2, 5, 6, 7, 2, 3, 10});
  CHECK(sieve_radicals({16, 1}, primes).values == std::vector<std::uint64_t>{2});
  // rad(1218) = 2*3*7*29 = 1218.
  CHECK(sieve_radicals({1213, 6}, primes).values ==
        std::vector<std::uint64_t>{1213, 1214, 15, 38, 1217, 1218});
}

TEST_CASE("sieve matches oracle over many windows") {
  const auto primes = primes_up_to(1'100'000);
  // Windows straddle the internal block size and start at awkward offsets.
  const Interval windows[] = {{1, 200000}, {32767, 70000}, {999'999'000, 5000},
                              {(1ULL << 40) - 300, 600}, {1'000'000'000'000ULL, 400}};
  for (const auto& w : windows) {
    const auto seg = sieve_radicals(w, primes);
    for (std::uint64_t k = 0; k < w.length; ++k) {
      INFO("n = " << w.start + k);
      REQUIRE(seg.values[k] == radical_oracle(w.start + k));
    }
  }
}

TEST_CASE("sieve output independent of thread count") {
  const auto primes = primes_up_to(20000);
  const Interval w{123456789, 300001};
  const auto serial = sieve_radicals(w, primes, 1);
  for (unsigned t : {2u, 3u, 8u}) CHECK(sieve_radicals(w, primes, t).values == serial.values);
}

TEST_CASE("sieve rejects insufficient primes and bad intervals") {
  const auto primes = primes_up_to(10);
  CHECK_NOTHROW(sieve_radicals({1, 120}, primes));
  CHECK_THROWS_AS(sieve_radicals({1, 121}, primes), std::invalid_argument);
  CHECK_THROWS_AS(sieve_radicals({0, 10}, primes), std::invalid_argument);
  CHECK_THROWS_AS(sieve_radicals({5, 0}, primes), std::invalid_argument);
  CHECK_THROWS_AS(sieve_radicals({UINT64_MAX, 2}, primes), std::invalid_argument);
}

TEST_CASE("strip_twos_fast") {
  auto seg = strip_twos_fast(identity_segment({40, 1}));
  CHECK(seg.values[0] == 10);
  CHECK(strip_twos_fast(identity_segment({6, 1})).values[0] == 6);
  CHECK(strip_twos_fast(identity_segment({1024, 1})).values[0] == 2);
  CHECK(strip_twos_fast(identity_segment({1ULL << 63, 1})).values[0] == 2);
}

TEST_CASE("ctz path equals the generic exponent loop for p = 2") {
  for (const Interval w : {Interval{1, 5000}, Interval{4093, 777}, Interval{(1ULL << 33) - 17, 4096}}) {
    auto fast = strip_twos_fast(identity_segment(w));
    auto generic = identity_segment(w);
    divide_out_prime_powers(w.start, generic.values, 2);
    REQUIRE(fast.values == generic.values);

    // Completing both with the odd primes gives the radicals.
    const auto primes = primes_up_to(isqrt(w.last()));
    for (std::uint64_t p : primes) {
      if (p == 2) continue;
      divide_out_prime_powers(w.start, fast.values, p);
      divide_out_prime_powers(w.start, generic.values, p);
    }
    REQUIRE(fast.values == generic.values);
    REQUIRE(fast.values == sieve_radicals(w, primes).values);
  }
}

TEST_CASE("exponent loop does not overflow near 2^64") {
  const Interval w{UINT64_MAX - 999, 1000};
  auto seg = identity_segment(w);
  divide_out_prime_powers(w.start, seg.values, 2);
  divide_out_prime_powers(w.start, seg.values, 3);
  for (std::uint64_t k = 0; k < w.length; ++k) {
    std::uint64_t n = w.start + k;
    std::uint64_t expect = n;
    for (std::uint64_t p : {2ULL, 3ULL}) {
      int v = 0;
      for (std::uint64_t t = n; t % p == 0; t /= p) ++v;
      for (int i = 1; i < v; ++i) expect /= p;
    }
    REQUIRE(seg.values[k] == expect);
  }
}
