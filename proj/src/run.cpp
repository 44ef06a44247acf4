#include "benelux/run.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "benelux/families.hpp"
#include "benelux/primes.hpp"
#include "benelux/radical.hpp"

namespace benelux {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitBadConfig = 2;

int run_sort(const RunConfig& config, std::ostream& log) {
  const PrimeList primes = primes_for_endpoint(config.limit);
  SortSearchOptions options{config.threads, config.memory_budget_bytes};
  const auto pairs = find_pairs_sorted(config.limit, primes, options);
  write_pairs_atomic(config.output_path, pairs, config.format);
  log << "sort: " << pairs.size() << " pairs below " << config.limit << '\n';
  return kExitOk;
}

// Drops records a resumed run is about to regenerate, so each chunk's pairs
// appear exactly once even if the previous run died between writing them and
// recording the checkpoint.
void trim_output(const RunConfig& config, std::uint64_t next_chunk, std::uint64_t chunks) {
  const std::uint64_t keep_below =
      next_chunk >= chunks ? config.limit : chunk_bounds(next_chunk, config.chunk_size).first;
  auto pairs = read_pairs(config.output_path, config.format);
  std::erase_if(pairs, [&](const BeneluxPair& p) { return p.n >= keep_below; });
  write_pairs_atomic(config.output_path, pairs, config.format);
}

int run_chunked(const RunConfig& config, std::ostream& log) {
  const std::uint64_t chunks = chunk_count(config.limit, config.chunk_size);
  std::uint64_t start = 0;

  if (config.resume) {
    if (auto cp = read_checkpoint(*config.checkpoint_path)) {
      if (cp->limit != config.limit || cp->chunk_size != config.chunk_size) {
        log << "error: checkpoint is for limit=" << cp->limit << " chunk_size=" << cp->chunk_size
            << ", run asks for limit=" << config.limit << " chunk_size=" << config.chunk_size << '\n';
        return kExitBadConfig;
      }
      start = std::min(cp->next_chunk, chunks);
    }
  }
  if (start > 0) {
    if (!std::filesystem::exists(config.output_path)) {
      log << "error: checkpoint says chunk " << start << " but output "
          << config.output_path.string() << " is missing\n";
      return kExitFailure;
    }
    trim_output(config, start, chunks);
  } else {
    write_file_atomic(config.output_path, file_preamble(config.format));
  }

  std::ofstream out(config.output_path, std::ios::binary | std::ios::app);
  if (!out) throw std::runtime_error("cannot open " + config.output_path.string());

  const PrimeList primes = primes_for_endpoint(config.limit);
  FullRunOptions options;
  options.search = ChunkedSearchOptions{config.threads, config.hash};
  options.resume_from = start;
  std::uint64_t total = 0;
  options.on_chunk = [&](const Chunk& chunk, const std::vector<BeneluxPair>& pairs) {
    for (const auto& pair : pairs) out << format_pair(pair, config.format);
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + config.output_path.string());
    if (config.checkpoint_path) {
      write_checkpoint(*config.checkpoint_path, {1, config.limit, config.chunk_size, chunk.index + 1});
    }
    total += pairs.size();
  };
  if (config.checkpoint_path && start == 0) {
    write_checkpoint(*config.checkpoint_path, {1, config.limit, config.chunk_size, 0});
  }
  run_full_chunked(config.limit, config.chunk_size, primes, options);
  log << "chunked: " << total << " pairs in chunks " << start << ".." << chunks << " below "
      << config.limit << '\n';
  return kExitOk;
}

CheckResult check_sieve(const SelfTestOptions& options, RadicalFunction radical) {
  CheckResult result{"sieve-vs-oracle", true, {}};
  const auto seg = sieve_radicals(Interval{1, options.sieve_limit},
                                  primes_for_endpoint(options.sieve_limit), options.threads);
  for (std::uint64_t n = 1; n <= options.sieve_limit; ++n) {
    const std::uint64_t expect = radical(n);
    if (seg.rad(n) != expect) {
      result.passed = false;
      result.detail = "first mismatch at n=" + std::to_string(n) + ": sieve " +
                      std::to_string(seg.rad(n)) + ", oracle " + std::to_string(expect);
      return result;
    }
  }
  result.detail = std::to_string(options.sieve_limit) + " radicals agree";
  return result;
}

CheckResult check_cross(const SelfTestOptions& options) {
  CheckResult result{"sort-vs-chunked", true, {}};
  const PrimeList primes = primes_for_endpoint(options.cross_limit);
  const std::string expect =
      normalized_csv(find_pairs_sorted(options.cross_limit, primes, {options.threads}));
  for (std::uint64_t s : options.cross_chunk_sizes) {
    FullRunOptions run_options;
    run_options.search = {options.threads, options.hash};
    if (normalized_csv(run_full_chunked(options.cross_limit, s, primes, run_options)) != expect) {
      result.passed = false;
      result.detail = "chunk size " + std::to_string(s) + " disagrees with sort at limit " +
                      std::to_string(options.cross_limit);
      return result;
    }
  }
  result.detail = "limit " + std::to_string(options.cross_limit) + ", " +
                  std::to_string(options.cross_chunk_sizes.size()) + " chunk sizes";
  return result;
}

CheckResult check_families(const SelfTestOptions& options, RadicalFunction radical) {
  CheckResult result{"families", true, {}};
  const auto known = expected_pairs_up_to(kCompletenessBound);
  for (const auto& pair : known.all()) {
    const auto got = classify(pair.m, pair.n, radical(pair.m), radical(pair.m + 1),
                              radical(pair.n), radical(pair.n + 1));
    if (!got || got->kind != pair.kind) {
      result.passed = false;
      result.detail = "(" + std::to_string(pair.m) + ", " + std::to_string(pair.n) +
                      ") does not verify as " + std::string(to_string(pair.kind)) + " kind";
      return result;
    }
  }
  const auto found = find_pairs_sorted(options.cross_limit, primes_for_endpoint(options.cross_limit),
                                       {options.threads});
  if (found != expected_pairs_up_to(options.cross_limit).all()) {
    result.passed = false;
    result.detail = "search below " + std::to_string(options.cross_limit) +
                    " differs from the known families";
    return result;
  }
  result.detail = std::to_string(known.first_kind.size() + known.second_kind.size()) +
                  " known pairs verified";
  return result;
}

CheckResult check_brute_force(const SelfTestOptions& options, RadicalFunction radical) {
  CheckResult result{"brute-force", true, {}};
  const std::uint64_t limit = options.brute_force_limit;
  const PrimeList primes = primes_for_endpoint(limit);
  const std::string expect = normalized_csv(brute_force_pairs(limit, radical));
  if (normalized_csv(find_pairs_sorted(limit, primes, {options.threads})) != expect) {
    result.passed = false;
    result.detail = "sort search differs from brute force at limit " + std::to_string(limit);
    return result;
  }
  FullRunOptions run_options;
  run_options.search = {options.threads, options.hash};
  if (normalized_csv(run_full_chunked(limit, 1000, primes, run_options)) != expect) {
    result.passed = false;
    result.detail = "chunked search differs from brute force at limit " + std::to_string(limit);
    return result;
  }
  result.detail = "limit " + std::to_string(limit);
  return result;
}

}  // namespace

Algorithm resolve_algorithm(const RunConfig& config) {
  if (config.algorithm) return *config.algorithm;
  if (config.limit < kSortDefaultCeiling && sort_search_bytes(config.limit) <= config.memory_budget_bytes) {
    return Algorithm::Sort;
  }
  return Algorithm::Chunked;
}

void validate(const RunConfig& config) {
  if (config.limit < 3) throw std::invalid_argument("--limit must be >= 3");
  if (config.threads < 1) throw std::invalid_argument("--threads must be >= 1");
  if (config.output_path.empty()) throw std::invalid_argument("--output is required");
  if (resolve_algorithm(config) == Algorithm::Chunked) {
    if (config.chunk_size < 3) throw std::invalid_argument("--chunk-size must be >= 3");
    if (config.chunk_size > 0xffffffffULL) throw std::invalid_argument("--chunk-size must be < 2^32");
  }
  if (config.resume && !config.checkpoint_path) {
    throw std::invalid_argument("--resume needs --checkpoint");
  }
}

int run(const RunConfig& config, std::ostream& log) {
  try {
    validate(config);
  } catch (const std::invalid_argument& e) {
    log << "error: " << e.what() << '\n';
    return kExitBadConfig;
  }
  try {
    return resolve_algorithm(config) == Algorithm::Sort ? run_sort(config, log)
                                                        : run_chunked(config, log);
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
  }
  return kExitFailure;
}

bool SelfTestReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

SelfTestReport self_test(const SelfTestOptions& options) {
  const RadicalFunction radical = options.radical ? options.radical : radical_oracle;
  SelfTestReport report;
  report.checks.push_back(check_sieve(options, radical));
  report.checks.push_back(check_cross(options));
  report.checks.push_back(check_families(options, radical));
  report.checks.push_back(check_brute_force(options, radical));
  return report;
}

void print_report(const SelfTestReport& report, std::ostream& out) {
  for (const auto& check : report.checks) {
    out << (check.passed ? "PASS " : "FAIL ") << check.name << ": " << check.detail << '\n';
  }
  out << (report.passed() ? "self-test passed" : "self-test FAILED") << '\n';
}

}  // namespace benelux
