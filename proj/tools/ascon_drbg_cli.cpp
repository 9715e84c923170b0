#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ascon_drbg/bench.hpp"
#include "ascon_drbg/bitstring.hpp"
#include "ascon_drbg/drbg.hpp"
#include "ascon_drbg/entropy.hpp"
#include "ascon_drbg/errors.hpp"
#include "ascon_drbg/kat.hpp"
#include "ascon_drbg/mechanism.hpp"

namespace {

using namespace ascon_drbg;

struct GenerateArgs {
  std::string mechanism;
  std::size_t bytes = 0;
  std::string seed_hex;
  std::string add_input_hex;
  std::string format = "hex";
  std::string out;
};

struct KatArgs {
  std::string suite = "all";
  std::string kat_dir = ASCON_DRBG_DEFAULT_KAT_DIR;
};

struct BenchArgs {
  std::vector<std::string> mechanisms;
  std::size_t iterations = 10000;
  std::size_t bits_per_call = 256;
  std::size_t warmup = 1000;
  std::string format = "markdown";
  std::string out;
};

/// stdout, or the file named by --out.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int cmd_generate(const GenerateArgs& args) {
  auto mech = make_mechanism(args.mechanism);

  std::unique_ptr<EntropySource> entropy;
  if (!args.seed_hex.empty()) {
    entropy = std::make_unique<ScriptedEntropySource>(from_hex(args.seed_hex));
  } else {
    entropy = std::make_unique<OsEntropySource>();
  }
  const OptionalBits add_input =
      args.add_input_hex.empty() ? OptionalBits{} : BitString::from_hex(args.add_input_hex);

  mech->instantiate(*entropy);

  Bytes result;
  result.reserve(args.bytes);
  const std::size_t max_bytes = DrbgLimits::kMaxBitsPerRequest / 8;
  BitString chunk;
  while (result.size() < args.bytes) {
    const std::size_t n = std::min(max_bytes, args.bytes - result.size());
    DrbgStatus status = mech->generate(n * 8, add_input, chunk);
    if (status == DrbgStatus::reseed_required) {
      mech->reseed(*entropy);
      status = mech->generate(n * 8, add_input, chunk);
    }
    if (status != DrbgStatus::success) {
      std::cerr << "ascon-drbg: generate returned " << to_string(status) << "\n";
      return 1;
    }
    const auto bytes = chunk.bytes();
    result.insert(result.end(), bytes.begin(), bytes.end());
  }

  Output out(args.out);
  if (args.format == "raw") {
    out.stream().write(reinterpret_cast<const char*>(result.data()),
                       static_cast<std::streamsize>(result.size()));
  } else {
    out.stream() << to_hex(result) << "\n";
  }
  return 0;
}

int cmd_kat(const KatArgs& args) {
  const auto suite = parse_kat_suite(args.suite);
  if (!suite) throw ParameterError("unknown suite '" + args.suite + "' (expected all, ascon or drbg)");

  const KatReport report = run_kat_suite(*suite, args.kat_dir);
  for (const auto& f : report.files) {
    for (const auto& line : f.failures) std::cout << "FAIL " << line << "\n";
    std::cout << f.file << ": " << f.passed << " passed, " << f.failed << " failed\n";
  }
  std::cout << "total: " << report.passed() << " passed, " << report.failed() << " failed\n";
  return report.ok() ? 0 : 1;
}

int cmd_bench(const BenchArgs& args) {
  BenchConfig config;
  if (!args.mechanisms.empty()) config.mechanisms = args.mechanisms;
  config.iterations = args.iterations;
  config.bits_per_call = args.bits_per_call;
  config.warmup = args.warmup;

  const BenchReport report = run_bench(config);
  Output out(args.out);
  if (args.format == "csv") {
    out.stream() << format_csv(report);
    std::cerr << format_reference_csv();
  } else {
    out.stream() << format_markdown(report) << "\n" << format_reference_markdown();
  }
  for (const auto& r : report.rows) {
    if (!r.ok()) std::cerr << "ascon-drbg: " << r.mechanism << ": " << r.error << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic random bit generators over Ascon, SHA-256 and AES-128"};
  app.require_subcommand(1);

  const std::vector<std::string> names(kMechanismNames.begin(), kMechanismNames.end());

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate random bytes");
  generate->add_option("--mechanism,-m", gen.mechanism, "DRBG mechanism")
      ->required()
      ->check(CLI::IsMember(names));
  generate->add_option("--bytes,-n", gen.bytes, "Number of bytes to produce")->required();
  generate->add_option("--seed-hex", gen.seed_hex,
                       "Replay this hex byte script as the entropy source (reproducible output)");
  generate->add_option("--add-input-hex", gen.add_input_hex, "Additional input for every generate call");
  generate->add_option("--format", gen.format, "Output form")->check(CLI::IsMember({"hex", "raw"}));
  generate->add_option("--out,-o", gen.out, "Write to this file instead of stdout");

  KatArgs kat;
  auto* kat_cmd = app.add_subcommand("kat", "Run the known-answer test suites");
  kat_cmd->add_option("suite,--suite", kat.suite, "all, ascon or drbg")
      ->check(CLI::IsMember({"all", "ascon", "drbg"}));
  kat_cmd->add_option("--kat-dir", kat.kat_dir, "Directory holding the vector files");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time generate calls for each mechanism");
  bench_cmd->add_option("--mechanism,-m", bench.mechanisms, "Mechanisms to run (default: all six)")
      ->check(CLI::IsMember(names));
  bench_cmd->add_option("--iterations", bench.iterations, "Timed generate calls per mechanism")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--bits-per-call", bench.bits_per_call, "Output bits per generate call");
  bench_cmd->add_option("--warmup", bench.warmup, "Untimed generate calls before timing");
  bench_cmd->add_option("--format", bench.format, "Report format")
      ->check(CLI::IsMember({"csv", "markdown"}));
  bench_cmd->add_option("--out,-o", bench.out, "Write the report to this file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) return cmd_generate(gen);
    if (*kat_cmd) return cmd_kat(kat);
    if (*bench_cmd) return cmd_bench(bench);
  } catch (const ascon_drbg::Error& e) {
    std::cerr << "ascon-drbg: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
