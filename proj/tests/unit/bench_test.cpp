#include "ascon_drbg/bench.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "ascon_drbg/errors.hpp"

using namespace ascon_drbg;

namespace {

BenchConfig small_config() {
  BenchConfig c;
  c.iterations = 20;
  c.warmup = 2;
  return c;
}

}  // namespace

TEST(Bench, OneRowPerMechanismInOrder) {
  const auto report = run_bench(small_config());
  ASSERT_EQ(report.rows.size(), kMechanismNames.size());
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& row = report.rows[i];
    EXPECT_EQ(row.mechanism, kMechanismNames[i]);
    ASSERT_TRUE(row.ok()) << row.error;
    EXPECT_GE(*row.mean_ms, 0.0);
    EXPECT_EQ(row.iterations, 20u);
    EXPECT_EQ(row.bits_per_call, 256u);
    EXPECT_GT(row.state_bytes, 0u);
  }
}

TEST(Bench, ZeroIterationsRejected) {
  BenchConfig c = small_config();
  c.iterations = 0;
  EXPECT_THROW(run_bench(c), ParameterError);
}

TEST(Bench, UnknownMechanismBecomesFailedRow) {
  BenchConfig c = small_config();
  c.mechanisms = {"nope", "ascon-hash"};
  const auto report = run_bench(c);
  ASSERT_EQ(report.rows.size(), 2u);
  EXPECT_FALSE(report.rows[0].ok());
  EXPECT_TRUE(report.rows[1].ok());
}

TEST(Bench, EntropyFailureBecomesFailedRow) {
  BenchConfig c = small_config();
  c.mechanisms = {"ascon-hash"};
  ScriptedEntropySource empty(Bytes{});
  const auto report = run_bench(c, empty);
  ASSERT_EQ(report.rows.size(), 1u);
  EXPECT_FALSE(report.rows[0].ok());
  EXPECT_FALSE(report.rows[0].error.empty());
  EXPECT_EQ(format_mean(report.rows[0]), "failed");
}

TEST(Bench, OversizedCallsFailTheRow) {
  BenchConfig c = small_config();
  c.mechanisms = {"ascon-ctr"};
  c.bits_per_call = DrbgLimits::kMaxBitsPerRequest + 1;
  const auto report = run_bench(c);
  EXPECT_FALSE(report.rows.at(0).ok());
}

TEST(BenchFormat, CsvAndMarkdownCarryTheSameNumbers) {
  BenchReport report;
  report.rows.push_back({"ascon-hash", "Ascon-Hash256", 118, 0.0123456789, 10, 256, ""});
  report.rows.push_back({"aes128-ctr", "AES-128", 40, std::nullopt, 3, 256, "boom"});
  const std::string csv = format_csv(report);
  const std::string md = format_markdown(report);
  EXPECT_NE(csv.find("0.012346"), std::string::npos);
  EXPECT_NE(md.find("0.012346"), std::string::npos);
  EXPECT_NE(csv.find("failed"), std::string::npos);
  EXPECT_NE(md.find("failed"), std::string::npos);
  std::istringstream lines(csv);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) ++count;
  EXPECT_EQ(count, 3u);
}

TEST(BenchFormat, ReferenceTablesListAllMechanisms) {
  const std::string md = format_reference_markdown();
  const std::string csv = format_reference_csv();
  for (const auto& r : kReferenceRows) {
    EXPECT_NE(md.find(r.label), std::string::npos);
    EXPECT_NE(csv.find(r.mechanism), std::string::npos);
  }
  EXPECT_NE(csv.find("0.154"), std::string::npos);
}
