#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ascon_drbg/entropy.hpp"
#include "ascon_drbg/mechanism.hpp"

namespace ascon_drbg {

struct BenchConfig {
  std::vector<std::string> mechanisms{kMechanismNames.begin(), kMechanismNames.end()};
  std::size_t iterations = 10000;
  std::size_t bits_per_call = 256;
  std::size_t warmup = 1000;
  MechanismOptions options;
};

struct BenchRow {
  std::string mechanism;
  std::string primitive;
  std::size_t state_bytes = 0;
  std::optional<double> mean_ms;  // empty when the row failed
  std::size_t iterations = 0;     // completed timed iterations
  std::size_t bits_per_call = 0;
  std::string error;

  bool ok() const { return mean_ms.has_value(); }
};

struct BenchReport {
  std::vector<BenchRow> rows;
};

/// Instantiates from `entropy`, runs the untimed warm-up, then times each
/// generate call with a monotonic clock. Failures are reported in the row.
BenchRow bench_mechanism(std::string_view name, const BenchConfig& config, EntropySource& entropy);

/// One row per requested mechanism, seeded from the OS. Throws
/// ParameterError if iterations is zero.
BenchReport run_bench(const BenchConfig& config);
BenchReport run_bench(const BenchConfig& config, EntropySource& entropy);

/// Means are printed with six decimals in both formats.
std::string format_mean(const BenchRow& row);
std::string format_csv(const BenchReport& report);
std::string format_markdown(const BenchReport& report);

/// Published figures for the same six mechanisms, measured with a Java
/// implementation on a Raspberry Pi 4. Memory there is a heap delta, so it is
/// not comparable with the analytic state_bytes column.
struct ReferenceRow {
  std::string_view mechanism;
  std::string_view label;
  std::string_view primitive;
  std::size_t memory_bytes;
  double time_ms;
};

inline constexpr std::array<ReferenceRow, 6> kReferenceRows = {{
    {"sha256-hash", "Hash-Based DRBG", "SHA-256", 5216, 0.100},
    {"ascon-hash", "Ascon-Driven Hash-Based DRBG", "Ascon-Hash256", 2608, 0.103},
    {"sha256-hmac", "HMAC DRBG", "SHA-256", 10424, 0.133},
    {"ascon-hmac", "Ascon-Driven HMAC DRBG", "Ascon-Hash256", 5208, 0.154},
    {"aes128-ctr", "CTR DRBG", "AES-128", 8072, 0.114},
    {"ascon-ctr", "Ascon-Driven CTR DRBG", "Ascon-AEAD128", 5208, 0.109},
}};

std::string format_reference_markdown();
std::string format_reference_csv();

}  // namespace ascon_drbg
