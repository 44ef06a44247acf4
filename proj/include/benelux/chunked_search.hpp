#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "benelux/primes.hpp"
#include "benelux/signatures.hpp"

namespace benelux {

inline constexpr std::uint64_t kDefaultChunkSize = std::uint64_t{1} << 27;

// C_i = [1 + i(s-1), 1 + (i+1)(s-1)]. Consecutive chunks share one integer;
// the set-domain [first, last - 1] holds the n whose signature the chunk owns.
struct Chunk {
  std::uint64_t index = 0;
  std::uint64_t size = 0;
  std::uint64_t first = 0;
  std::uint64_t last = 0;

  std::uint64_t domain_first() const { return first; }
  std::uint64_t domain_last() const { return last - 1; }
  bool owns(std::uint64_t n) const { return n >= first && n < last; }
};

Chunk chunk_bounds(std::uint64_t index, std::uint64_t size);

// Number of chunks whose set-domains cover [1, limit - 1].
std::uint64_t chunk_count(std::uint64_t limit, std::uint64_t size);

using HashFunction = std::uint64_t (*)(PairSignature);

// 64-bit mix of a canonical signature. Symmetric in the two radicals because
// the signature is canonical.
std::uint64_t signature_hash64(PairSignature sig);

// Home slot of `sig` in a table of `table_size` slots (a power of two).
std::uint64_t commutative_hash(PairSignature sig, std::uint64_t table_size);

// Smallest power of two >= 4(s - 1).
std::uint64_t table_size_for_chunk(std::uint64_t chunk_size);

class TableFull : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Radicals of a contiguous run of integers; rad(n) for n in
// [start, start + values.size() - 1].
struct SegmentView {
  std::uint64_t start = 1;
  std::span<const std::uint64_t> values;

  std::uint64_t rad(std::uint64_t n) const { return values[n - start]; }
};

// Open-addressing table with linear probing over the integers of one chunk.
// A slot packs (offset of n from the chunk start) + 1 in its low 32 bits and
// the upper 32 bits of the signature hash in its high bits; 0 means empty.
// Signatures are not stored: equality is re-checked against the resident
// radicals of the chunk.
class SignatureTable {
 public:
  explicit SignatureTable(std::uint64_t table_size, HashFunction hash = signature_hash64);

  static SignatureTable for_chunk_size(std::uint64_t chunk_size,
                                       HashFunction hash = signature_hash64) {
    return SignatureTable(table_size_for_chunk(chunk_size), hash);
  }

  // Empties the table and binds it to the radicals of the chunk whose
  // members will be inserted. `resident` must cover every inserted n and n+1.
  void reset(SegmentView resident);

  // Stores n at the first empty slot of its probe sequence. For every
  // occupied slot passed whose signature equals n's, appends the classified
  // pair (stored, n). Safe to call concurrently. Throws TableFull.
  void insert(std::uint64_t n, std::vector<BeneluxPair>& out);

  // Appends classify(m, stored) for every entry with m's signature found
  // along the probe sequence. Read-only; safe to call concurrently.
  void probe(std::uint64_t m, std::uint64_t rad_m, std::uint64_t rad_m1,
             std::vector<BeneluxPair>& out) const;

  // Variants taking a precomputed hash, for batched callers.
  void insert_hashed(std::uint64_t hash, std::uint64_t n, std::vector<BeneluxPair>& out);
  void probe_hashed(std::uint64_t hash, std::uint64_t m, std::uint64_t rad_m,
                    std::uint64_t rad_m1, std::vector<BeneluxPair>& out) const;
  void prefetch(std::uint64_t hash) const { __builtin_prefetch(&slots_[hash & mask_]); }
  bool slot_empty(std::uint64_t hash) const {
    return slots_[hash & mask_].load(std::memory_order_relaxed) == 0;
  }

  std::uint64_t hash(PairSignature sig) const {
    return hash_ == signature_hash64 ? signature_hash64(sig) : hash_(sig);
  }
  std::uint64_t home_slot(PairSignature sig) const { return hash(sig) & mask_; }

  std::uint64_t table_size() const { return size_; }
  std::uint64_t occupied() const { return occupied_.load(std::memory_order_relaxed); }
  double load_factor() const { return static_cast<double>(occupied()) / static_cast<double>(size_); }

  // Integer stored at `slot`, if any.
  std::optional<std::uint64_t> entry(std::uint64_t slot) const;
  const SegmentView& resident() const { return resident_; }

 private:
  std::uint64_t size_;
  std::uint64_t mask_;
  HashFunction hash_;
  struct SlotDeleter {
    void operator()(std::atomic<std::uint64_t>* p) const;
  };
  std::unique_ptr<std::atomic<std::uint64_t>[], SlotDeleter> slots_;
  std::atomic<std::uint64_t> occupied_{0};
  SegmentView resident_;
};

struct ChunkedSearchOptions {
  unsigned threads = 1;
  HashFunction hash = signature_hash64;
};

// Reusable state for searching chunks of one size: the table and the radical
// buffers stay allocated between chunks.
class ChunkedSearcher {
 public:
  // With a finite `limit` only n < limit are searched, and the table is
  // sized for the largest set-domain that can actually occur.
  ChunkedSearcher(std::uint64_t chunk_size, const PrimeList& primes,
                  ChunkedSearchOptions options = {}, std::uint64_t limit = UINT64_MAX);

  // All pairs (m, n), m < n, with n in the set-domain of chunk `index` and
  // n < limit, sorted by (n, m).
  std::vector<BeneluxPair> search_chunk(std::uint64_t index);

  const SignatureTable& table() const { return table_; }
  std::uint64_t chunk_size() const { return chunk_size_; }

 private:
  void probe_chunk(std::uint64_t j, std::vector<std::uint64_t>& buffer,
                   std::vector<BeneluxPair>& out) const;

  std::uint64_t chunk_size_;
  std::uint64_t limit_;
  const PrimeList& primes_;
  ChunkedSearchOptions options_;
  SignatureTable table_;
  std::vector<std::uint64_t> resident_;
  std::vector<std::vector<std::uint64_t>> probe_buffers_;
};

std::vector<BeneluxPair> search_chunk(std::uint64_t index, std::uint64_t chunk_size,
                                      const PrimeList& primes,
                                      const ChunkedSearchOptions& options = {});

struct FullRunOptions {
  ChunkedSearchOptions search;
  std::uint64_t resume_from = 0;
  // Called after each chunk completes, with that chunk's pairs sorted by (n, m).
  std::function<void(const Chunk&, const std::vector<BeneluxPair>&)> on_chunk;
};

// Runs search_chunk over every chunk from `resume_from` up to the one holding
// limit - 1, keeping only n < limit. Returns the concatenated per-chunk output.
std::vector<BeneluxPair> run_full_chunked(std::uint64_t limit, std::uint64_t chunk_size,
                                          const PrimeList& primes,
                                          const FullRunOptions& options = {});

}  // namespace benelux
