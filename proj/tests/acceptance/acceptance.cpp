// Acceptance checks for the library as a whole. Prints one PASS/FAIL line per
// criterion and exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ascon_drbg/bench.hpp"
#include "ascon_drbg/entropy.hpp"
#include "ascon_drbg/kat.hpp"
#include "ascon_drbg/mechanism.hpp"
#include "equivalence.hpp"
#include "properties.hpp"

using namespace ascon_drbg;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string describe(const KatFileResult& f) {
  std::ostringstream s;
  s << f.file << " " << f.passed << "/" << (f.passed + f.failed);
  if (!f.failures.empty()) s << " (first failure: " << f.failures.front() << ")";
  return s.str();
}

Outcome ascon_kats(const fs::path& dir) {
  const auto start = Clock::now();
  const auto hash = run_ascon_hash_kat(dir / kAsconHashKatFile);
  const auto aead = run_ascon_aead_kat(dir / kAsconAeadKatFile);
  const double t = seconds_since(start);
  Outcome o;
  o.pass = hash.failed == 0 && aead.failed == 0 && hash.passed > 0 && aead.passed > 0 && t < 10.0;
  std::ostringstream s;
  s << describe(hash) << ", " << describe(aead) << ", " << t << " s";
  o.detail = s.str();
  return o;
}

Outcome baseline_kats(const fs::path& dir) {
  const KatFileResult files[] = {run_sha256_hash_drbg_kat(dir / kHashDrbgKatFile),
                                 run_sha256_hmac_drbg_kat(dir / kHmacDrbgKatFile),
                                 run_aes128_ctr_drbg_kat(dir / kCtrDrbgKatFile)};
  Outcome o{true, ""};
  for (const auto& f : files) {
    o.pass = o.pass && f.failed == 0 && f.passed > 0;
    if (!o.detail.empty()) o.detail += ", ";
    o.detail += describe(f);
  }
  return o;
}

Outcome equivalence() {
  constexpr std::size_t kCases = 200;
  const auto results = oracle::check_all(0x5eed, kCases);
  Outcome o{true, ""};
  std::size_t total = 0;
  for (const auto& r : results) {
    total += r.cases;
    bool ok = r.cases >= 100 && r.mismatches == 0;
    const bool is_generate = r.algorithm.find("generate") != std::string::npos;
    if (is_generate) {
      for (std::size_t len : oracle::kOutputLengths) ok = ok && r.output_lengths.count(len) != 0;
      ok = ok && r.add_present && r.add_absent;
    }
    if (r.algorithm.find("ctr") != std::string::npos) {
      for (unsigned w : oracle::kCtrLens) ok = ok && r.ctr_lens.count(w) != 0;
    }
    if (!ok) {
      o.pass = false;
      o.detail += r.algorithm + " failed (" + std::to_string(r.mismatches) + " mismatches" +
                  (r.first_mismatch.empty() ? "" : ": " + r.first_mismatch) + "); ";
    }
  }
  o.detail += std::to_string(results.size()) + " algorithms, " + std::to_string(total) + " cases";
  return o;
}

Outcome properties() {
  const auto start = Clock::now();
  const auto results = props::run_all(0xC0FFEE, 1000);
  const double t = seconds_since(start);
  Outcome o{t < 60.0, ""};
  for (const auto& r : results) {
    if (!r.ok() || r.cases < 1000) {
      o.pass = false;
      o.detail += r.name + " failed (" + r.first_failure + "); ";
    }
  }
  std::ostringstream s;
  s << results.size() << " properties x 1000 cases, " << t << " s";
  o.detail += s.str();
  return o;
}

Bytes script(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Bytes out(n);
  for (auto& b : out) b = static_cast<std::uint8_t>(rng());
  return out;
}

std::string stream_of(std::string_view name, std::uint64_t seed) {
  ScriptedEntropySource src(script(48 + 32, seed));
  auto m = make_mechanism(name);
  m->instantiate(src, BitString::from_hex("0011"));
  std::string out;
  BitString bits;
  for (std::size_t n : {256u, 1000u, 8u, 4096u}) {
    if (m->generate(n, std::nullopt, bits) != DrbgStatus::success) return "generate failed";
    out += bits.storage().empty() ? "" : to_hex(bits.storage());
  }
  m->reseed(src);
  if (m->generate(512, BitString::from_hex("ff"), bits) != DrbgStatus::success) {
    return "generate failed";
  }
  return out + to_hex(bits.storage());
}

Outcome determinism(const fs::path& dir) {
  const auto ref = run_ascon_drbg_kat(dir / kAsconDrbgKatFile);
  Outcome o{ref.failed == 0 && ref.passed > 0, describe(ref)};
  for (std::string_view name : kMechanismNames) {
    const std::string a = stream_of(name, 99), b = stream_of(name, 99), c = stream_of(name, 100);
    if (a != b || a == c || a == "generate failed") {
      o.pass = false;
      o.detail += "; " + std::string(name) + " stream not reproducible";
    }
  }
  o.detail += "; " + std::to_string(kMechanismNames.size()) + " mechanisms replayed twice";
  return o;
}

Outcome benchmark() {
  const BenchConfig config;  // defaults: all mechanisms, 10000 x 256 bits
  const auto start = Clock::now();
  const auto report = run_bench(config);
  const double t = seconds_since(start);

  std::map<std::string, std::size_t> footprint;
  bool rows_ok = report.rows.size() == 6;
  std::ostringstream s;
  for (const auto& row : report.rows) {
    rows_ok = rows_ok && row.ok() && row.iterations == config.iterations &&
              row.bits_per_call == config.bits_per_call;
    footprint[row.mechanism] = row.state_bytes;
    s << row.mechanism << " " << format_mean(row) << " ms/" << row.state_bytes << " B, ";
  }
  s << t << " s total";

  const std::pair<const char*, const char*> pairs[] = {
      {"ascon-hash", "sha256-hash"}, {"ascon-hmac", "sha256-hmac"}, {"ascon-ctr", "aes128-ctr"}};
  bool smaller = true;
  for (const auto& [ascon, base] : pairs) {
    if (!(footprint[ascon] < footprint[base])) {
      smaller = false;
      s << "; footprint " << ascon << " " << footprint[ascon] << " B is not below " << base << " "
        << footprint[base] << " B";
    }
  }
  return {rows_ok && t < 300.0 && smaller, s.str()};
}

Outcome monobit() {
  constexpr std::size_t kBits = 1'000'000;
  Outcome o{true, ""};
  for (std::string_view name : {"ascon-hash", "ascon-hmac", "ascon-ctr"}) {
    ScriptedEntropySource src(script(48, 2026));
    auto m = make_mechanism(name);
    m->instantiate(src);
    std::size_t ones = 0, seen = 0;
    BitString bits;
    while (seen < kBits) {
      const std::size_t n = std::min<std::size_t>(8192, kBits - seen);
      if (m->generate(n, std::nullopt, bits) != DrbgStatus::success) {
        o.pass = false;
        break;
      }
      ones += bits.popcount();
      seen += n;
    }
    const double p = static_cast<double>(ones) / kBits;
    o.pass = o.pass && p >= 0.49 && p <= 0.51;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%s %.5f", o.detail.empty() ? "" : ", ",
                  std::string(name).c_str(), p);
    o.detail += buf;
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path dir = argc > 1 ? fs::path(argv[1]) : fs::path(ASCON_DRBG_TEST_KAT_DIR);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"ascon primitive known-answer vectors", [&] { return ascon_kats(dir); }},
      {"baseline DRBG known-answer vectors", [&] { return baseline_kats(dir); }},
      {"oracle equivalence", equivalence},
      {"property suite", properties},
      {"deterministic replay", [&] { return determinism(dir); }},
      {"default benchmark and state footprint", benchmark},
      {"monobit frequency", monobit},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
