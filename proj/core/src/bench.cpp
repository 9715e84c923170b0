#include "ascon_drbg/bench.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "ascon_drbg/errors.hpp"

namespace ascon_drbg {

namespace {

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

}  // namespace

BenchRow bench_mechanism(std::string_view name, const BenchConfig& config, EntropySource& entropy) {
  BenchRow row;
  row.mechanism = std::string(name);
  row.bits_per_call = config.bits_per_call;
  try {
    auto mech = make_mechanism(name, config.options);
    row.primitive = std::string(mech->primitive());
    mech->instantiate(entropy);
    row.state_bytes = mech->state_bytes();

    BitString out;
    for (std::size_t i = 0; i < config.warmup; ++i) {
      if (mech->generate(config.bits_per_call, std::nullopt, out) != DrbgStatus::success) {
        row.error = "generate failed during warm-up";
        return row;
      }
    }

    using clock = std::chrono::steady_clock;
    clock::duration total{};
    for (std::size_t i = 0; i < config.iterations; ++i) {
      const auto start = clock::now();
      const DrbgStatus status = mech->generate(config.bits_per_call, std::nullopt, out);
      total += clock::now() - start;
      if (status != DrbgStatus::success) {
        row.error = "generate returned " + std::string(to_string(status));
        return row;
      }
      ++row.iterations;
    }
    row.mean_ms = std::chrono::duration<double, std::milli>(total).count() /
                  static_cast<double>(row.iterations);
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

BenchReport run_bench(const BenchConfig& config, EntropySource& entropy) {
  if (config.iterations == 0) throw ParameterError("iterations must be at least 1");
  BenchReport report;
  for (const auto& name : config.mechanisms) report.rows.push_back(bench_mechanism(name, config, entropy));
  return report;
}

BenchReport run_bench(const BenchConfig& config) {
  OsEntropySource entropy;
  return run_bench(config, entropy);
}

std::string format_mean(const BenchRow& row) { return row.ok() ? fixed(*row.mean_ms, 6) : "failed"; }

std::string format_csv(const BenchReport& report) {
  std::ostringstream out;
  out << "mechanism,primitive,state_bytes,mean_ms,iterations,bits_per_call\n";
  for (const auto& r : report.rows) {
    out << r.mechanism << ',' << r.primitive << ',' << r.state_bytes << ',' << format_mean(r) << ','
        << r.iterations << ',' << r.bits_per_call << '\n';
  }
  return out.str();
}

std::string format_markdown(const BenchReport& report) {
  std::ostringstream out;
  out << "| mechanism | primitive | state_bytes | mean_ms | iterations | bits_per_call |\n"
      << "|---|---|---:|---:|---:|---:|\n";
  for (const auto& r : report.rows) {
    out << "| " << r.mechanism << " | " << r.primitive << " | " << r.state_bytes << " | "
        << format_mean(r) << " | " << r.iterations << " | " << r.bits_per_call << " |\n";
  }
  return out.str();
}

std::string format_reference_markdown() {
  std::ostringstream out;
  out << "Reference figures (Java on Raspberry Pi 4; memory is a heap delta):\n\n"
      << "| mechanism | DRBG | primitive | memory_bytes | time_ms |\n"
      << "|---|---|---|---:|---:|\n";
  for (const auto& r : kReferenceRows) {
    out << "| " << r.mechanism << " | " << r.label << " | " << r.primitive << " | " << r.memory_bytes
        << " | " << fixed(r.time_ms, 3) << " |\n";
  }
  return out.str();
}

std::string format_reference_csv() {
  std::ostringstream out;
  out << "mechanism,drbg,primitive,memory_bytes,time_ms\n";
  for (const auto& r : kReferenceRows) {
    out << r.mechanism << ',' << r.label << ',' << r.primitive << ',' << r.memory_bytes << ','
        << fixed(r.time_ms, 3) << '\n';
  }
  return out.str();
}

}  // namespace ascon_drbg
