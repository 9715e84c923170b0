#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ascon_drbg {

/// One blank-line-separated record of a `key = value` vector file.
///
/// Lines starting with '#' are comments. Runs of `[...]` lines are section
/// headers and apply to every record until the next run. Field order is kept
/// because some formats repeat keys (AdditionalInput, EntropyInputPR).
struct KatRecord {
  std::vector<std::string> sections;  // header text without brackets
  std::vector<std::pair<std::string, std::string>> fields;
  std::size_t line = 0;  // 1-based line of the first field

  const std::string* find(std::string_view key) const;
  /// Throws FormatError if the key is missing.
  const std::string& get(std::string_view key) const;
  std::vector<std::string> get_all(std::string_view key) const;
  /// Value of a `[Name = value]` header, if present.
  std::optional<std::string> section_value(std::string_view name) const;
};

std::vector<KatRecord> parse_kat(std::istream& in);
/// Throws FormatError if the file cannot be opened.
std::vector<KatRecord> parse_kat_file(const std::filesystem::path& path);

enum class KatSuite { all, ascon, drbg };

std::optional<KatSuite> parse_kat_suite(std::string_view name);

struct KatFileResult {
  std::string file;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;
};

struct KatReport {
  std::vector<KatFileResult> files;

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0 && !files.empty(); }
};

inline constexpr std::string_view kAsconHashKatFile = "ascon_hash256.txt";
inline constexpr std::string_view kAsconAeadKatFile = "ascon_aead128.txt";
inline constexpr std::string_view kHashDrbgKatFile = "hash_drbg_sha256.rsp";
inline constexpr std::string_view kHmacDrbgKatFile = "hmac_drbg_sha256.rsp";
inline constexpr std::string_view kCtrDrbgKatFile = "ctr_drbg_aes128_nodf.rsp";
inline constexpr std::string_view kAsconDrbgKatFile = "ascon_drbg_reference.rsp";

KatFileResult run_ascon_hash_kat(const std::filesystem::path& file);
KatFileResult run_ascon_aead_kat(const std::filesystem::path& file);
KatFileResult run_sha256_hash_drbg_kat(const std::filesystem::path& file);
KatFileResult run_sha256_hmac_drbg_kat(const std::filesystem::path& file);
KatFileResult run_aes128_ctr_drbg_kat(const std::filesystem::path& file);
KatFileResult run_ascon_drbg_kat(const std::filesystem::path& file);

/// Runs every vector file belonging to `suite` from `dir`. A missing file
/// shows up as a failure, not an exception.
KatReport run_kat_suite(KatSuite suite, const std::filesystem::path& dir);

}  // namespace ascon_drbg
