#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "benelux/chunked_search.hpp"
#include "benelux/oracle.hpp"
#include "benelux/pair_io.hpp"
#include "benelux/sort_search.hpp"

namespace benelux {

enum class Algorithm { Sort, Chunked };

// Above this limit the default algorithm is the chunked search.
inline constexpr std::uint64_t kSortDefaultCeiling = std::uint64_t{1} << 28;

struct RunConfig {
  std::uint64_t limit = 0;
  std::optional<Algorithm> algorithm;  // unset: chosen from limit
  std::uint64_t chunk_size = kDefaultChunkSize;
  unsigned threads = 1;
  std::filesystem::path output_path;
  OutputFormat format = OutputFormat::Csv;
  std::optional<std::filesystem::path> checkpoint_path;
  bool resume = false;
  std::uint64_t memory_budget_bytes = kDefaultSortMemoryBudget;
  HashFunction hash = signature_hash64;
};

Algorithm resolve_algorithm(const RunConfig& config);

// Throws std::invalid_argument describing the first violated constraint.
void validate(const RunConfig& config);

// Searches, streams pairs to config.output_path and, for the chunked search,
// checkpoints after each chunk. Returns the process exit status; diagnostics
// go to `log`.
int run(const RunConfig& config, std::ostream& log);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelfTestReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

struct SelfTestOptions {
  RadicalFunction radical = nullptr;  // defaults to radical_oracle
  HashFunction hash = signature_hash64;
  unsigned threads = 1;
  std::uint64_t sieve_limit = 1'000'000;
  std::uint64_t cross_limit = 1'000'000;
  std::vector<std::uint64_t> cross_chunk_sizes{std::uint64_t{1} << 12, std::uint64_t{1} << 16};
  std::uint64_t brute_force_limit = 20'000;
};

// Sieve against the oracle, sort against chunked, the known families, and
// all algorithms against the quadratic reference.
SelfTestReport self_test(const SelfTestOptions& options = {});

void print_report(const SelfTestReport& report, std::ostream& out);

}  // namespace benelux
