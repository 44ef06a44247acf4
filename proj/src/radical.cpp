#include "benelux/radical.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

namespace benelux {
namespace {

constexpr std::uint64_t kBlockLength = std::uint64_t{1} << 15;
constexpr std::uint64_t kMinParallelLength = std::uint64_t{1} << 16;

// Inverse of odd p modulo 2^64; multiplying by it divides exactly.
std::uint64_t inverse_mod_2_64(std::uint64_t p) {
  std::uint64_t inv = p;
  for (int i = 0; i < 5; ++i) inv *= 2 - p * inv;
  return inv;
}

struct OddPrime {
  std::uint64_t p;
  std::uint64_t inverse;
};

// Algorithm core for one prime over one window. `endpoint` bounds the
// exponent loop; p^e never overflows.
void sieve_prime(std::uint64_t start, std::span<std::uint64_t> values, const OddPrime& prime) {
  const std::uint64_t length = values.size();
  const std::uint64_t endpoint = start + length - 1;
  const std::uint64_t p = prime.p;
  if (p > endpoint / p) return;
  std::uint64_t power = p * p;
  while (true) {
    std::uint64_t res = start % power;
    if (res == 0) res = power;
    const std::uint64_t shift = power - res;
    if (shift >= length) break;
    for (std::uint64_t k = shift; k < length; k += power) values[k] *= prime.inverse;
    if (power > endpoint / p) break;
    power *= p;
  }
}

void sieve_range(std::uint64_t start, std::span<std::uint64_t> values,
                 std::span<const OddPrime> odd_primes) {
  const std::uint64_t length = values.size();

  for (std::uint64_t block = 0; block < length; block += kBlockLength) {
    const std::uint64_t block_len = std::min(kBlockLength, length - block);
    const std::uint64_t block_start = start + block;
    auto window = values.subspan(block, block_len);
    for (std::uint64_t k = 0; k < block_len; ++k) window[k] = block_start + k;
    strip_twos_fast(block_start, window);
    for (const auto& prime : odd_primes) {
      if (prime.p * prime.p > kBlockLength) break;
      sieve_prime(block_start, window, prime);
    }
  }

  // Primes whose square exceeds a block hit at most one slot per block;
  // sweep them over the whole range instead of recomputing offsets per block.
  for (const auto& prime : odd_primes) {
    if (prime.p * prime.p <= kBlockLength) continue;
    sieve_prime(start, values, prime);
  }
}

}  // namespace

void validate(const Interval& interval) {
  if (interval.start < 1) throw std::invalid_argument("interval start must be >= 1");
  if (interval.length < 1) throw std::invalid_argument("interval length must be >= 1");
  if (interval.length - 1 > std::numeric_limits<std::uint64_t>::max() - interval.start) {
    throw std::invalid_argument("interval endpoint overflows 64 bits");
  }
}

std::uint64_t radical_oracle(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("radical_oracle: n must be >= 1");
  std::uint64_t rad = 1;
  std::uint64_t rest = n;
  for (std::uint64_t d = 2; d <= rest / d; d += (d == 2 ? 1 : 2)) {
    if (rest % d != 0) continue;
    rad *= d;
    while (rest % d == 0) rest /= d;
  }
  if (rest > 1) rad *= rest;
  return rad;
}

RadicalSegment identity_segment(const Interval& interval) {
  validate(interval);
  RadicalSegment seg{interval, std::vector<std::uint64_t>(interval.length)};
  for (std::uint64_t k = 0; k < interval.length; ++k) seg.values[k] = interval.start + k;
  return seg;
}

void strip_twos_fast(std::uint64_t start, std::span<std::uint64_t> values) {
  const std::uint64_t length = values.size();
  std::uint64_t k = (4 - (start & 3)) & 3;  // first multiple of 4
  for (; k < length; k += 4) {
    const std::uint64_t n = start + k;
    values[k] >>= std::countr_zero(n) - 1;
  }
}

RadicalSegment strip_twos_fast(RadicalSegment segment) {
  strip_twos_fast(segment.interval.start, segment.values);
  return segment;
}

void divide_out_prime_powers(std::uint64_t start, std::span<std::uint64_t> values,
                             std::uint64_t p) {
  const std::uint64_t length = values.size();
  if (length == 0) return;
  const std::uint64_t endpoint = start + length - 1;
  if (p > endpoint / p) return;
  std::uint64_t power = p * p;
  while (true) {
    std::uint64_t res = start % power;
    if (res == 0) res = power;
    const std::uint64_t shift = power - res;
    if (shift >= length) break;
    for (std::uint64_t k = 0; k <= (length - 1 - shift) / power; ++k) {
      values[shift + k * power] /= p;
    }
    if (power > endpoint / p) break;
    power *= p;
  }
}

void sieve_radicals_into(const Interval& interval, const PrimeList& primes,
                         std::span<std::uint64_t> out, unsigned threads) {
  validate(interval);
  if (out.size() != interval.length) {
    throw std::invalid_argument("sieve_radicals_into: output size does not match interval");
  }
  const std::uint64_t needed = isqrt(interval.last());
  if (primes.limit < needed) {
    throw std::invalid_argument("sieve_radicals: prime list covers up to " +
                                std::to_string(primes.limit) + " but endpoint " +
                                std::to_string(interval.last()) + " needs " +
                                std::to_string(needed));
  }

  std::vector<OddPrime> odd_primes;
  odd_primes.reserve(primes.size());
  for (std::uint64_t p : primes) {
    if (p > needed) break;
    if (p != 2) odd_primes.push_back({p, inverse_mod_2_64(p)});
  }

  const std::uint64_t max_workers = std::max<std::uint64_t>(1, interval.length / kMinParallelLength);
  const auto workers = static_cast<unsigned>(std::min<std::uint64_t>(std::max(threads, 1u), max_workers));
  if (workers == 1) {
    sieve_range(interval.start, out, odd_primes);
    return;
  }

  // Disjoint sub-ranges: each worker runs the full prime loop on its own
  // slots, so the result is identical to the serial run.
  const std::uint64_t per = (interval.length + workers - 1) / workers;
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = w * per;
    if (begin >= interval.length) break;
    const std::uint64_t len = std::min(per, interval.length - begin);
    pool.emplace_back([&, begin, len] {
      sieve_range(interval.start + begin, out.subspan(begin, len), odd_primes);
    });
  }
}

RadicalSegment sieve_radicals(const Interval& interval, const PrimeList& primes,
                              unsigned threads) {
  validate(interval);
  RadicalSegment seg{interval, std::vector<std::uint64_t>(interval.length)};
  sieve_radicals_into(interval, primes, seg.values, threads);
  return seg;
}

}  // namespace benelux
