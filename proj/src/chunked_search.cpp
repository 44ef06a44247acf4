#include "benelux/chunked_search.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <memory>
#include <new>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "benelux/radical.hpp"

#include <sys/mman.h>

namespace benelux {
namespace {

constexpr std::uint64_t kEmpty = 0;
constexpr std::uint64_t kOffsetMask = 0xffffffffULL;
constexpr std::uint64_t kPrefetchDistance = 16;

std::uint64_t tag_of(std::uint64_t hash) { return hash >> 32; }

// Keeps m < n regardless of which side was stored first.
void emit(std::uint64_t a, std::uint64_t rad_a, std::uint64_t rad_a1, std::uint64_t b,
          std::uint64_t rad_b, std::uint64_t rad_b1, std::vector<BeneluxPair>& out) {
  auto pair = a < b ? classify(a, b, rad_a, rad_a1, rad_b, rad_b1)
                    : classify(b, a, rad_b, rad_b1, rad_a, rad_a1);
  if (pair) out.push_back(*pair);
}

// Large tables are probed at random; backing them with huge pages keeps TLB
// misses from dominating the probe cost.
std::atomic<std::uint64_t>* allocate_slots(std::uint64_t count) {
  constexpr std::size_t kHugePage = std::size_t{2} << 20;
  const std::size_t bytes = count * sizeof(std::atomic<std::uint64_t>);
  const std::size_t align = bytes >= kHugePage ? kHugePage : alignof(std::max_align_t);
  void* raw = std::aligned_alloc(align, (bytes + align - 1) / align * align);
  if (raw == nullptr) throw std::bad_alloc();
#ifdef MADV_HUGEPAGE
  if (align == kHugePage) madvise(raw, bytes, MADV_HUGEPAGE);
#endif
  auto* slots = static_cast<std::atomic<std::uint64_t>*>(raw);
  std::uninitialized_default_construct_n(slots, count);
  return slots;
}

// Visits k = 0..count-1 with hash_at(k), issuing the table prefetch for
// element k + kPrefetchDistance before visiting k.
template <class HashAt, class Visit>
void for_each_prefetched(const SignatureTable& table, std::uint64_t count, HashAt hash_at, Visit visit) {
  std::uint64_t ring[kPrefetchDistance];
  const std::uint64_t warm = std::min(kPrefetchDistance, count);
  for (std::uint64_t k = 0; k < warm; ++k) {
    ring[k] = hash_at(k);
    table.prefetch(ring[k]);
  }
  for (std::uint64_t k = 0; k < count; ++k) {
    const std::uint64_t slot = k % kPrefetchDistance;
    const std::uint64_t hash = ring[slot];
    if (k + kPrefetchDistance < count) {
      ring[slot] = hash_at(k + kPrefetchDistance);
      table.prefetch(ring[slot]);
    }
    visit(k, hash);
  }
}

unsigned clamp_workers(unsigned threads, std::uint64_t jobs) {
  return static_cast<unsigned>(std::clamp<std::uint64_t>(jobs, 1, std::max(threads, 1u)));
}

}  // namespace

Chunk chunk_bounds(std::uint64_t index, std::uint64_t size) {
  if (size < 3) throw std::invalid_argument("chunk size must be >= 3");
  const std::uint64_t step = size - 1;
  if (index + 1 > (std::numeric_limits<std::uint64_t>::max() - 1) / step) {
    throw std::invalid_argument("chunk bounds overflow 64 bits");
  }
  return Chunk{index, size, 1 + index * step, 1 + (index + 1) * step};
}

std::uint64_t chunk_count(std::uint64_t limit, std::uint64_t size) {
  if (size < 3) throw std::invalid_argument("chunk size must be >= 3");
  if (limit < 2) return 0;
  return (limit - 1 + size - 2) / (size - 1);
}

std::uint64_t signature_hash64(PairSignature sig) {
  std::uint64_t x = sig.lo * 0x9e3779b97f4a7c15ULL + sig.hi;
  x ^= x >> 32;
  x *= 0xd6e8feb86659fd93ULL;
  x ^= x >> 29;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 32;
  return x;
}

std::uint64_t commutative_hash(PairSignature sig, std::uint64_t table_size) {
  if (!std::has_single_bit(table_size)) throw std::invalid_argument("table size must be a power of two");
  return signature_hash64(sig) & (table_size - 1);
}

std::uint64_t table_size_for_chunk(std::uint64_t chunk_size) {
  if (chunk_size < 3) throw std::invalid_argument("chunk size must be >= 3");
  if (chunk_size - 1 > kOffsetMask - 1) throw std::invalid_argument("chunk size must be < 2^32");
  return std::bit_ceil(4 * (chunk_size - 1));
}

SignatureTable::SignatureTable(std::uint64_t table_size, HashFunction hash)
    : size_(table_size), mask_(table_size - 1), hash_(hash) {
  if (!std::has_single_bit(table_size)) throw std::invalid_argument("table size must be a power of two");
  if (hash_ == nullptr) throw std::invalid_argument("hash function must not be null");
  slots_.reset(allocate_slots(size_));
}

void SignatureTable::SlotDeleter::operator()(std::atomic<std::uint64_t>* p) const { std::free(p); }

void SignatureTable::reset(SegmentView resident) {
  if (resident.values.size() > kOffsetMask) {
    throw std::invalid_argument("resident segment too long for 32-bit slot offsets");
  }
  for (std::uint64_t i = 0; i < size_; ++i) slots_[i].store(kEmpty, std::memory_order_relaxed);
  occupied_.store(0, std::memory_order_relaxed);
  resident_ = resident;
}

std::optional<std::uint64_t> SignatureTable::entry(std::uint64_t slot) const {
  const std::uint64_t v = slots_[slot & mask_].load(std::memory_order_relaxed);
  if (v == kEmpty) return std::nullopt;
  return resident_.start + (v & kOffsetMask) - 1;
}


void SignatureTable::insert(std::uint64_t n, std::vector<BeneluxPair>& out) {
  insert_hashed(hash(signature_of(n, resident_.rad(n), resident_.rad(n + 1))), n, out);
}

void SignatureTable::insert_hashed(std::uint64_t hash, std::uint64_t n,
                                   std::vector<BeneluxPair>& out) {
  const std::uint64_t rad_n = resident_.rad(n);
  const std::uint64_t rad_n1 = resident_.rad(n + 1);
  const PairSignature sig = signature_of(n, rad_n, rad_n1);
  const std::uint64_t tag = tag_of(hash);
  const std::uint64_t mine = (tag << 32) | (n - resident_.start + 1);

  std::uint64_t slot = hash & mask_;
  for (std::uint64_t step = 0; step < size_; ++step, slot = (slot + 1) & mask_) {
    std::uint64_t seen = slots_[slot].load(std::memory_order_acquire);
    if (seen == kEmpty) {
      if (slots_[slot].compare_exchange_strong(seen, mine, std::memory_order_acq_rel)) {
        occupied_.fetch_add(1, std::memory_order_relaxed);
        return;
      }
      // Lost the race; `seen` now holds the winner, inspect it below.
    }
    if ((seen >> 32) != tag) continue;
    const std::uint64_t other = resident_.start + (seen & kOffsetMask) - 1;
    const std::uint64_t rad_o = resident_.rad(other);
    const std::uint64_t rad_o1 = resident_.rad(other + 1);
    if (signature_of(other, rad_o, rad_o1) == sig) emit(other, rad_o, rad_o1, n, rad_n, rad_n1, out);
  }
  throw TableFull("signature table full (" + std::to_string(size_) + " slots) inserting " +
                  std::to_string(n));
}

void SignatureTable::probe(std::uint64_t m, std::uint64_t rad_m, std::uint64_t rad_m1,
                           std::vector<BeneluxPair>& out) const {
  probe_hashed(hash(signature_of(m, rad_m, rad_m1)), m, rad_m, rad_m1, out);
}

void SignatureTable::probe_hashed(std::uint64_t hash, std::uint64_t m, std::uint64_t rad_m,
                                  std::uint64_t rad_m1, std::vector<BeneluxPair>& out) const {
  const PairSignature sig = signature_of(m, rad_m, rad_m1);
  const std::uint64_t tag = tag_of(hash);
  std::uint64_t slot = hash & mask_;
  for (std::uint64_t step = 0; step < size_; ++step, slot = (slot + 1) & mask_) {
    const std::uint64_t seen = slots_[slot].load(std::memory_order_relaxed);
    if (seen == kEmpty) return;
    if ((seen >> 32) != tag) continue;
    const std::uint64_t n = resident_.start + (seen & kOffsetMask) - 1;
    const std::uint64_t rad_n = resident_.rad(n);
    const std::uint64_t rad_n1 = resident_.rad(n + 1);
    if (signature_of(n, rad_n, rad_n1) == sig) emit(m, rad_m, rad_m1, n, rad_n, rad_n1, out);
  }
}

ChunkedSearcher::ChunkedSearcher(std::uint64_t chunk_size, const PrimeList& primes,
                                 ChunkedSearchOptions options, std::uint64_t limit)
    : chunk_size_(chunk_size),
      limit_(limit),
      primes_(primes),
      options_(options),
      table_(SignatureTable::for_chunk_size(
          std::min(chunk_size, std::max<std::uint64_t>(limit, 3)), options.hash)) {}

void ChunkedSearcher::probe_chunk(std::uint64_t j, std::vector<std::uint64_t>& buffer,
                                  std::vector<BeneluxPair>& out) const {
  const Chunk chunk = chunk_bounds(j, chunk_size_);
  buffer.resize(chunk_size_);
  sieve_radicals_into(Interval{chunk.first, chunk_size_}, primes_, buffer);

  const std::uint64_t count = chunk_size_ - 1;
  for_each_prefetched(
      table_, count,
      [&](std::uint64_t k) { return table_.hash(signature_of(chunk.first + k, buffer[k], buffer[k + 1])); },
      [&](std::uint64_t k, std::uint64_t hash) {
        if (!table_.slot_empty(hash)) table_.probe_hashed(hash, chunk.first + k, buffer[k], buffer[k + 1], out);
      });
}

std::vector<BeneluxPair> ChunkedSearcher::search_chunk(std::uint64_t index) {
  const Chunk chunk = chunk_bounds(index, chunk_size_);
  if (limit_ <= chunk.domain_first()) return {};
  const std::uint64_t domain_last = std::min(chunk.domain_last(), limit_ - 1);
  const std::uint64_t members = domain_last - chunk.domain_first() + 1;

  // Build phase: radicals of [first, domain_last + 1], then every member of
  // the set-domain goes into the table.
  resident_.resize(members + 1);
  sieve_radicals_into(Interval{chunk.first, members + 1}, primes_, resident_, options_.threads);
  table_.reset(SegmentView{chunk.first, resident_});

  std::vector<BeneluxPair> found;
  const unsigned builders = clamp_workers(options_.threads, members / 4096);
  if (builders == 1) {
    for_each_prefetched(
        table_, members,
        [&](std::uint64_t k) {
          return table_.hash(signature_of(chunk.first + k, resident_[k], resident_[k + 1]));
        },
        [&](std::uint64_t k, std::uint64_t hash) { table_.insert_hashed(hash, chunk.first + k, found); });
  } else {
    std::vector<std::vector<BeneluxPair>> partial(builders);
    const std::uint64_t per = (members + builders - 1) / builders;
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < builders; ++w) {
        pool.emplace_back([&, w] {
          const std::uint64_t begin = w * per;
          const std::uint64_t end = std::min(members, begin + per);
          for (std::uint64_t k = begin; k < end; ++k) table_.insert(chunk.first + k, partial[w]);
        });
      }
    }
    for (auto& p : partial) found.insert(found.end(), p.begin(), p.end());
  }

  // Probe phase: the table is read-only, earlier chunks are independent.
  const unsigned probers = clamp_workers(options_.threads, index);
  if (probe_buffers_.size() < probers) probe_buffers_.resize(probers);
  if (probers == 1) {
    for (std::uint64_t j = 0; j < index; ++j) probe_chunk(j, probe_buffers_[0], found);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::vector<BeneluxPair>> partial(probers);
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < probers; ++w) {
        pool.emplace_back([&, w] {
          for (std::uint64_t j = next.fetch_add(1); j < index; j = next.fetch_add(1)) {
            probe_chunk(j, probe_buffers_[w], partial[w]);
          }
        });
      }
    }
    for (auto& p : partial) found.insert(found.end(), p.begin(), p.end());
  }

  sort_by_n(found);
  return found;
}

std::vector<BeneluxPair> search_chunk(std::uint64_t index, std::uint64_t chunk_size,
                                      const PrimeList& primes, const ChunkedSearchOptions& options) {
  ChunkedSearcher searcher(chunk_size, primes, options);
  return searcher.search_chunk(index);
}

std::vector<BeneluxPair> run_full_chunked(std::uint64_t limit, std::uint64_t chunk_size,
                                          const PrimeList& primes, const FullRunOptions& options) {
  if (limit < 3) throw std::invalid_argument("run_full_chunked: limit must be >= 3");
  const std::uint64_t chunks = chunk_count(limit, chunk_size);
  ChunkedSearcher searcher(chunk_size, primes, options.search, limit);
  std::vector<BeneluxPair> all;
  for (std::uint64_t i = options.resume_from; i < chunks; ++i) {
    auto pairs = searcher.search_chunk(i);
    if (options.on_chunk) options.on_chunk(chunk_bounds(i, chunk_size), pairs);
    all.insert(all.end(), pairs.begin(), pairs.end());
  }
  return all;
}

}  // namespace benelux
