// Command-line front end for the Benelux pair search.
//
//   benelux --limit 1048576 --output pairs.csv
//   benelux --limit 268435456 --algo chunked --chunk-size 16777216 \
//           --output pairs.csv --checkpoint run.ckpt [--resume]
//   benelux --self-test

#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "benelux/pair_io.hpp"
#include "benelux/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exhaustive search for Benelux pairs of first and second kind"};

  benelux::RunConfig config;
  config.threads = std::max(1u, std::thread::hardware_concurrency());
  std::string algo;
  std::string format = "csv";
  std::string output;
  std::string checkpoint;
  std::string normalize;
  bool self_test = false;

  app.add_option("--limit", config.limit, "Search all pairs with m < n < LIMIT");
  app.add_option("--algo", algo, "sort | chunked (default: by limit)")
      ->check(CLI::IsMember({"sort", "chunked"}));
  app.add_option("--chunk-size", config.chunk_size, "Chunk size s for the chunked search")
      ->capture_default_str();
  app.add_option("--threads", config.threads, "Worker threads")->capture_default_str();
  app.add_option("--output", output, "Output file");
  app.add_option("--format", format, "csv | jsonl")->check(CLI::IsMember({"csv", "jsonl"}))
      ->capture_default_str();
  app.add_option("--checkpoint", checkpoint, "Checkpoint file (chunked search)");
  app.add_flag("--resume", config.resume, "Continue from --checkpoint");
  app.add_flag("--self-test", self_test, "Run the built-in verification suite");
  app.add_option("--normalize", normalize,
                 "Rewrite a result file as (m, n)-sorted CSV into --output (stdout if absent)");

  CLI11_PARSE(app, argc, argv);

  if (self_test) {
    benelux::SelfTestOptions options;
    options.threads = config.threads;
    const auto report = benelux::self_test(options);
    benelux::print_report(report, std::cout);
    return report.passed() ? 0 : 1;
  }

  if (!normalize.empty()) {
    try {
      const auto fmt = benelux::detect_format(normalize);
      const auto text = benelux::normalized_csv(benelux::read_pairs(normalize, fmt));
      if (output.empty()) {
        std::cout << text;
      } else {
        benelux::write_file_atomic(output, text);
      }
      return 0;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 1;
    }
  }

  if (algo == "sort") config.algorithm = benelux::Algorithm::Sort;
  if (algo == "chunked") config.algorithm = benelux::Algorithm::Chunked;
  config.format = format == "jsonl" ? benelux::OutputFormat::JsonLines : benelux::OutputFormat::Csv;
  config.output_path = output;
  if (!checkpoint.empty()) config.checkpoint_path = checkpoint;

  return benelux::run(config, std::cerr);
}
