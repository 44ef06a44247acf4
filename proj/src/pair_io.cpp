#include "benelux/pair_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace benelux {
namespace {

bool parse_u64(std::string_view text, std::uint64_t& value) {
  if (text.empty()) return false;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

std::optional<PairKind> kind_from(std::uint64_t k) {
  if (k == 1) return PairKind::First;
  if (k == 2) return PairKind::Second;
  return std::nullopt;
}

std::optional<BeneluxPair> parse_csv(std::string_view line) {
  std::uint64_t fields[5];
  std::size_t count = 0;
  while (true) {
    const auto comma = line.find(',');
    if (count == 5 || !parse_u64(line.substr(0, comma), fields[count])) return std::nullopt;
    ++count;
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  if (count != 5) return std::nullopt;
  const auto kind = kind_from(fields[0]);
  if (!kind) return std::nullopt;
  return BeneluxPair{fields[1], fields[2], *kind, fields[3], fields[4]};
}

std::optional<BeneluxPair> parse_json(std::string_view line) {
  const auto doc = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (!doc.is_object()) return std::nullopt;
  for (const char* key : {"kind", "m", "n", "rad_m", "rad_m1"}) {
    if (!doc.contains(key) || !doc[key].is_number_unsigned()) return std::nullopt;
  }
  const auto kind = kind_from(doc["kind"].get<std::uint64_t>());
  if (!kind) return std::nullopt;
  return BeneluxPair{doc["m"].get<std::uint64_t>(), doc["n"].get<std::uint64_t>(), *kind,
                     doc["rad_m"].get<std::uint64_t>(), doc["rad_m1"].get<std::uint64_t>()};
}

}  // namespace

std::string format_pair(const BeneluxPair& pair, OutputFormat format) {
  const auto kind = std::to_string(static_cast<int>(pair.kind));
  if (format == OutputFormat::Csv) {
    return kind + ',' + std::to_string(pair.m) + ',' + std::to_string(pair.n) + ',' +
           std::to_string(pair.rad_m) + ',' + std::to_string(pair.rad_m_plus_1) + '\n';
  }
  return "{\"kind\":" + kind + ",\"m\":" + std::to_string(pair.m) + ",\"n\":" +
         std::to_string(pair.n) + ",\"rad_m\":" + std::to_string(pair.rad_m) +
         ",\"rad_m1\":" + std::to_string(pair.rad_m_plus_1) + "}\n";
}

std::string_view file_preamble(OutputFormat format) {
  return format == OutputFormat::Csv ? kCsvHeader : std::string_view{};
}

std::optional<BeneluxPair> parse_pair_line(std::string_view line, OutputFormat format) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) return std::nullopt;
  return format == OutputFormat::Csv ? parse_csv(line) : parse_json(line);
}

std::vector<BeneluxPair> read_pairs(std::istream& in, OutputFormat format) {
  std::vector<BeneluxPair> out;
  std::string line;
  while (std::getline(in, line)) {
    // A record without its newline was cut short by an interrupted write.
    if (in.eof()) break;
    if (auto pair = parse_pair_line(line, format)) out.push_back(*pair);
  }
  return out;
}

std::vector<BeneluxPair> read_pairs(const std::filesystem::path& path, OutputFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_pairs(in, format);
}

OutputFormat detect_format(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    return line.front() == '{' ? OutputFormat::JsonLines : OutputFormat::Csv;
  }
  return OutputFormat::Csv;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void write_pairs_atomic(const std::filesystem::path& path, const std::vector<BeneluxPair>& pairs,
                        OutputFormat format) {
  std::string text(file_preamble(format));
  for (const auto& pair : pairs) text += format_pair(pair, format);
  write_file_atomic(path, text);
}

std::string normalized_csv(std::vector<BeneluxPair> pairs) {
  sort_by_m(pairs);
  std::string text(kCsvHeader);
  for (const auto& pair : pairs) text += format_pair(pair, OutputFormat::Csv);
  return text;
}

std::string encode_checkpoint(const Checkpoint& checkpoint) {
  return "benelux-checkpoint v" + std::to_string(checkpoint.version) + "\nlimit=" +
         std::to_string(checkpoint.limit) + "\nchunk_size=" + std::to_string(checkpoint.chunk_size) +
         "\nnext_chunk=" + std::to_string(checkpoint.next_chunk) + "\n";
}

Checkpoint decode_checkpoint(std::string_view text) {
  const auto fail = [](const std::string& why) -> Checkpoint {
    throw std::runtime_error("malformed checkpoint: " + why);
  };
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    if (nl == std::string_view::npos) return fail("missing trailing newline");
    lines.push_back(text.substr(0, nl));
    text.remove_prefix(nl + 1);
  }
  if (lines.size() != 4) return fail("expected 4 lines");
  if (lines[0] != "benelux-checkpoint v1") return fail("unknown header");

  Checkpoint cp;
  const auto field = [&](std::string_view line, std::string_view key, std::uint64_t& value) {
    if (!line.starts_with(key) || line.size() <= key.size() || line[key.size()] != '=' ||
        !parse_u64(line.substr(key.size() + 1), value)) {
      fail("bad field " + std::string(key));
    }
  };
  field(lines[1], "limit", cp.limit);
  field(lines[2], "chunk_size", cp.chunk_size);
  field(lines[3], "next_chunk", cp.next_chunk);
  return cp;
}

void write_checkpoint(const std::filesystem::path& path, const Checkpoint& checkpoint) {
  write_file_atomic(path, encode_checkpoint(checkpoint));
}

std::optional<Checkpoint> read_checkpoint(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return decode_checkpoint(text.str());
}

}  // namespace benelux
