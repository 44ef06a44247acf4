#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "benelux/signatures.hpp"

namespace benelux {

enum class OutputFormat { Csv, JsonLines };

inline constexpr std::string_view kCsvHeader = "kind,m,n,rad_m,rad_m1\n";

// One encoded record, newline included.
//   csv:   kind,m,n,rad_m,rad_m_plus_1
//   jsonl: {"kind":k,"m":m,"n":n,"rad_m":r,"rad_m1":r1}
std::string format_pair(const BeneluxPair& pair, OutputFormat format);

// Text preceding the first record (the CSV header; empty for JSON lines).
std::string_view file_preamble(OutputFormat format);

// Parses one record line; nullopt for the CSV header, blank lines and
// malformed or truncated lines.
std::optional<BeneluxPair> parse_pair_line(std::string_view line, OutputFormat format);

// Every well-formed record in `in`, in file order.
std::vector<BeneluxPair> read_pairs(std::istream& in, OutputFormat format);
std::vector<BeneluxPair> read_pairs(const std::filesystem::path& path, OutputFormat format);

// Guesses the format from the first non-empty line.
OutputFormat detect_format(const std::filesystem::path& path);

// Preamble plus records, written to a temporary and renamed into place.
void write_pairs_atomic(const std::filesystem::path& path, const std::vector<BeneluxPair>& pairs,
                        OutputFormat format);

// CSV with header, records sorted by (m, n, kind). Two runs over the same
// limit produce identical normalized text regardless of algorithm.
std::string normalized_csv(std::vector<BeneluxPair> pairs);

void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

struct Checkpoint {
  int version = 1;
  std::uint64_t limit = 0;
  std::uint64_t chunk_size = 0;
  std::uint64_t next_chunk = 0;

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

// "benelux-checkpoint v1\nlimit=<S>\nchunk_size=<s>\nnext_chunk=<i>\n"
std::string encode_checkpoint(const Checkpoint& checkpoint);

// Strict parse of encode_checkpoint's output; throws std::runtime_error.
Checkpoint decode_checkpoint(std::string_view text);

void write_checkpoint(const std::filesystem::path& path, const Checkpoint& checkpoint);

// nullopt when the file does not exist; throws when it is malformed.
std::optional<Checkpoint> read_checkpoint(const std::filesystem::path& path);

}  // namespace benelux
