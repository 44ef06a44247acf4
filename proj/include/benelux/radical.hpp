#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "benelux/primes.hpp"

namespace benelux {

// Integers [start, start + length - 1].
struct Interval {
  std::uint64_t start = 1;
  std::uint64_t length = 1;

  std::uint64_t last() const { return start + length - 1; }
  bool contains(std::uint64_t n) const { return n >= start && n - start < length; }
};

// Throws std::invalid_argument unless start >= 1, length >= 1 and the
// endpoint fits in 64 bits.
void validate(const Interval& interval);

// values[k] == rad(interval.start + k).
struct RadicalSegment {
  Interval interval;
  std::vector<std::uint64_t> values;

  std::uint64_t rad(std::uint64_t n) const { return values[n - interval.start]; }
};

// rad(n) by trial division. Slow; used as a reference.
std::uint64_t radical_oracle(std::uint64_t n);

// Radicals of every integer in `interval`. `primes` must cover
// sqrt(interval.last()); otherwise std::invalid_argument. The result does
// not depend on `threads`.
RadicalSegment sieve_radicals(const Interval& interval, const PrimeList& primes,
                              unsigned threads = 1);

// Same as sieve_radicals, writing into caller-owned storage of exactly
// interval.length entries.
void sieve_radicals_into(const Interval& interval, const PrimeList& primes,
                         std::span<std::uint64_t> out, unsigned threads = 1);

// Removes surplus factors of two using ctz: for every n with v2(n) >= 2 the
// slot is shifted right by v2(n) - 1. Expects values[k] == start + k.
void strip_twos_fast(std::uint64_t start, std::span<std::uint64_t> values);
RadicalSegment strip_twos_fast(RadicalSegment segment);

// One prime of the generic sieve: for each exponent e >= 2 with
// p^e <= endpoint, divides every slot whose integer is a multiple of p^e by p.
void divide_out_prime_powers(std::uint64_t start, std::span<std::uint64_t> values,
                             std::uint64_t p);

// Fresh segment with values[k] = start + k.
RadicalSegment identity_segment(const Interval& interval);

}  // namespace benelux
