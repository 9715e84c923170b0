#include "ascon_drbg/kat.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>

#include "ascon_drbg/ascon.hpp"
#include "ascon_drbg/baselines.hpp"
#include "ascon_drbg/ctr_drbg.hpp"
#include "ascon_drbg/errors.hpp"
#include "ascon_drbg/hash_drbg.hpp"
#include "ascon_drbg/hmac_drbg.hpp"

namespace ascon_drbg {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string label(const std::string& file, const KatRecord& r) {
  std::string out = file + ":" + std::to_string(r.line);
  for (const char* key : {"COUNT", "Count"}) {
    if (const auto* v = r.find(key)) return out + " (" + key + " = " + *v + ")";
  }
  return out;
}

std::string abbreviate(const std::string& hex) {
  return hex.size() <= 32 ? hex : hex.substr(0, 32) + "...";
}

void compare(KatFileResult& result, const KatRecord& r, const std::string& expected_hex,
             const std::string& actual_hex) {
  if (lower(expected_hex) == actual_hex) {
    ++result.passed;
    return;
  }
  ++result.failed;
  result.failures.push_back(label(result.file, r) + ": expected " + abbreviate(lower(expected_hex)) +
                            ", got " + abbreviate(actual_hex));
}

/// Applies `check` to every record, turning exceptions into failures.
KatFileResult for_each_record(const std::filesystem::path& file,
                              const std::function<void(KatFileResult&, const KatRecord&)>& check) {
  KatFileResult result;
  result.file = file.filename().string();
  std::vector<KatRecord> records;
  try {
    records = parse_kat_file(file);
  } catch (const Error& e) {
    ++result.failed;
    result.failures.push_back(result.file + ": " + e.what());
    return result;
  }
  for (const auto& r : records) {
    try {
      check(result, r);
    } catch (const Error& e) {
      ++result.failed;
      result.failures.push_back(label(result.file, r) + ": " + e.what());
    }
  }
  return result;
}

OptionalBits optional_field(const std::string* value) {
  if (value == nullptr || trim(*value).empty()) return std::nullopt;
  return BitString::from_hex(*value);
}

BitString bits_field(const KatRecord& r, std::string_view key) {
  return BitString::from_hex(r.get(key));
}

/// The two additional inputs of a CAVP-style record (absent ones as nullopt).
std::vector<OptionalBits> additional_inputs(const KatRecord& r) {
  std::vector<OptionalBits> out;
  for (const auto& v : r.get_all("AdditionalInput")) out.push_back(optional_field(&v));
  while (out.size() < 2) out.emplace_back();
  return out;
}

// The CAVP procedure shared by every DRBG file: instantiate; optional reseed;
// two generate calls, the second of which is compared.
template <typename State>
struct DrbgDriver {
  std::function<State(const KatRecord&)> instantiate;
  std::function<State(const State&, const BitString&, const OptionalBits&)> reseed;
  std::function<GenerateResult<State>(const State&, std::size_t, const OptionalBits&)> generate;
};

template <typename State>
void run_drbg_record(KatFileResult& result, const KatRecord& r, const DrbgDriver<State>& d) {
  const std::string& expected = r.get("ReturnedBits");
  const std::size_t out_bits = trim(expected).size() * 4;
  State s = d.instantiate(r);

  const auto adds = additional_inputs(r);
  const auto pr_entropy = r.get_all("EntropyInputPR");
  const bool prediction_resistance = !pr_entropy.empty();
  if (!prediction_resistance && r.find("EntropyInputReseed") != nullptr) {
    s = d.reseed(s, bits_field(r, "EntropyInputReseed"), optional_field(r.find("AdditionalInputReseed")));
  }

  GenerateResult<State> g;
  for (std::size_t i = 0; i < 2; ++i) {
    if (prediction_resistance) {
      s = d.reseed(s, BitString::from_hex(pr_entropy.at(i)), adds[i]);
      g = d.generate(s, out_bits, std::nullopt);
    } else {
      g = d.generate(s, out_bits, adds[i]);
    }
    if (g.status != DrbgStatus::success) {
      throw Error("generate returned " + std::string(to_string(g.status)));
    }
    s = std::move(g.state);
  }
  compare(result, r, std::string(trim(expected)), g.bits.to_hex());
}

std::size_t ctr_len_of(const KatRecord& r) {
  const auto v = r.section_value("CtrLen");
  return v ? static_cast<std::size_t>(std::stoul(*v)) : kCtrDefaultCtrLen;
}

const DrbgDriver<HashDrbgState> kAsconHashDriver{
    [](const KatRecord& r) {
      return hash_instantiate(bits_field(r, "EntropyInput"), bits_field(r, "Nonce"),
                              optional_field(r.find("PersonalizationString")));
    },
    [](const HashDrbgState& s, const BitString& e, const OptionalBits& a) { return hash_reseed(s, e, a); },
    [](const HashDrbgState& s, std::size_t n, const OptionalBits& a) { return hash_generate(s, n, a); }};

const DrbgDriver<HmacDrbgState> kAsconHmacDriver{
    [](const KatRecord& r) {
      return hmac_instantiate(bits_field(r, "EntropyInput"), bits_field(r, "Nonce"),
                              optional_field(r.find("PersonalizationString")));
    },
    [](const HmacDrbgState& s, const BitString& e, const OptionalBits& a) { return hmac_reseed(s, e, a); },
    [](const HmacDrbgState& s, std::size_t n, const OptionalBits& a) { return hmac_generate(s, n, a); }};

const DrbgDriver<CtrDrbgState> kAsconCtrDriver{
    [](const KatRecord& r) {
      return ctr_instantiate(bits_field(r, "EntropyInput"), AeadNonce::from_hex(r.get("Nonce")),
                             optional_field(r.find("PersonalizationString")),
                             from_hex(r.get("AssociatedData")), ctr_len_of(r));
    },
    [](const CtrDrbgState& s, const BitString& e, const OptionalBits& a) { return ctr_reseed(s, e, a); },
    [](const CtrDrbgState& s, std::size_t n, const OptionalBits& a) { return ctr_generate(s, n, a); }};

const DrbgDriver<HashDrbgState> kShaHashDriver{
    [](const KatRecord& r) {
      return sha256_hash_instantiate(bits_field(r, "EntropyInput"), bits_field(r, "Nonce"),
                                     optional_field(r.find("PersonalizationString")));
    },
    [](const HashDrbgState& s, const BitString& e, const OptionalBits& a) {
      return sha256_hash_reseed(s, e, a);
    },
    [](const HashDrbgState& s, std::size_t n, const OptionalBits& a) {
      return sha256_hash_generate(s, n, a);
    }};

const DrbgDriver<HmacDrbgState> kShaHmacDriver{
    [](const KatRecord& r) {
      return sha256_hmac_instantiate(bits_field(r, "EntropyInput"), bits_field(r, "Nonce"),
                                     optional_field(r.find("PersonalizationString")));
    },
    [](const HmacDrbgState& s, const BitString& e, const OptionalBits& a) {
      return sha256_hmac_reseed(s, e, a);
    },
    [](const HmacDrbgState& s, std::size_t n, const OptionalBits& a) {
      return sha256_hmac_generate(s, n, a);
    }};

const DrbgDriver<AesCtrDrbgState> kAesCtrDriver{
    [](const KatRecord& r) {
      return aes128_ctr_instantiate(bits_field(r, "EntropyInput"),
                                    optional_field(r.find("PersonalizationString")), ctr_len_of(r));
    },
    [](const AesCtrDrbgState& s, const BitString& e, const OptionalBits& a) {
      return aes128_ctr_reseed(s, e, a);
    },
    [](const AesCtrDrbgState& s, std::size_t n, const OptionalBits& a) {
      return aes128_ctr_generate(s, n, a);
    }};

}  // namespace

const std::string* KatRecord::find(std::string_view key) const {
  for (const auto& [k, v] : fields) {
    if (k == key) return &v;
  }
  return nullptr;
}

const std::string& KatRecord::get(std::string_view key) const {
  if (const auto* v = find(key)) return *v;
  throw FormatError("record at line " + std::to_string(line) + " has no field '" + std::string(key) +
                    "'");
}

std::vector<std::string> KatRecord::get_all(std::string_view key) const {
  std::vector<std::string> out;
  for (const auto& [k, v] : fields) {
    if (k == key) out.push_back(v);
  }
  return out;
}

std::optional<std::string> KatRecord::section_value(std::string_view name) const {
  for (const auto& s : sections) {
    const auto eq = s.find('=');
    if (eq != std::string::npos && trim(std::string_view(s).substr(0, eq)) == name) {
      return std::string(trim(std::string_view(s).substr(eq + 1)));
    }
  }
  return std::nullopt;
}

std::vector<KatRecord> parse_kat(std::istream& in) {
  std::vector<KatRecord> records;
  std::vector<std::string> sections;
  bool headers_closed = true;
  KatRecord current;

  auto flush = [&] {
    if (!current.fields.empty()) {
      current.sections = sections;
      records.push_back(std::move(current));
    }
    current = KatRecord{};
  };

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) {
      flush();
      continue;
    }
    if (line.front() == '#') continue;
    if (line.front() == '[') {
      flush();
      if (line.back() != ']') {
        throw FormatError("unterminated section header at line " + std::to_string(line_no));
      }
      if (headers_closed) sections.clear();
      headers_closed = false;
      sections.emplace_back(trim(line.substr(1, line.size() - 2)));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw FormatError("expected 'key = value' at line " + std::to_string(line_no));
    }
    headers_closed = true;
    if (current.fields.empty()) current.line = line_no;
    current.fields.emplace_back(std::string(trim(line.substr(0, eq))),
                                std::string(trim(line.substr(eq + 1))));
  }
  flush();
  return records;
}

std::vector<KatRecord> parse_kat_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open vector file " + path.string());
  return parse_kat(in);
}

std::optional<KatSuite> parse_kat_suite(std::string_view name) {
  if (name == "all") return KatSuite::all;
  if (name == "ascon") return KatSuite::ascon;
  if (name == "drbg") return KatSuite::drbg;
  return std::nullopt;
}

std::size_t KatReport::passed() const {
  std::size_t n = 0;
  for (const auto& f : files) n += f.passed;
  return n;
}

std::size_t KatReport::failed() const {
  std::size_t n = 0;
  for (const auto& f : files) n += f.failed;
  return n;
}

KatFileResult run_ascon_hash_kat(const std::filesystem::path& file) {
  return for_each_record(file, [](KatFileResult& result, const KatRecord& r) {
    compare(result, r, r.get("MD"), to_hex(ascon_hash256(from_hex(r.get("Msg")))));
  });
}

KatFileResult run_ascon_aead_kat(const std::filesystem::path& file) {
  return for_each_record(file, [](KatFileResult& result, const KatRecord& r) {
    const auto out = aead128_encrypt(AeadKey::from_hex(r.get("Key")), AeadNonce::from_hex(r.get("Nonce")),
                                     from_hex(r.get("AD")), from_hex(r.get("PT")));
    compare(result, r, r.get("CT"), to_hex(out.ciphertext) + to_hex(out.tag.bytes()));
  });
}

KatFileResult run_sha256_hash_drbg_kat(const std::filesystem::path& file) {
  return for_each_record(file, [](KatFileResult& result, const KatRecord& r) {
    run_drbg_record(result, r, kShaHashDriver);
  });
}

KatFileResult run_sha256_hmac_drbg_kat(const std::filesystem::path& file) {
  return for_each_record(file, [](KatFileResult& result, const KatRecord& r) {
    run_drbg_record(result, r, kShaHmacDriver);
  });
}

KatFileResult run_aes128_ctr_drbg_kat(const std::filesystem::path& file) {
  return for_each_record(file, [](KatFileResult& result, const KatRecord& r) {
    run_drbg_record(result, r, kAesCtrDriver);
  });
}

KatFileResult run_ascon_drbg_kat(const std::filesystem::path& file) {
  return for_each_record(file, [](KatFileResult& result, const KatRecord& r) {
    if (r.sections.empty()) throw FormatError("record outside any section");
    const std::string& kind = r.sections.front();
    if (kind == "Ascon-Hash256 Hash_DRBG") {
      run_drbg_record(result, r, kAsconHashDriver);
    } else if (kind == "Ascon-Hash256 HMAC_DRBG") {
      run_drbg_record(result, r, kAsconHmacDriver);
    } else if (kind == "Ascon-AEAD128 CTR_DRBG") {
      run_drbg_record(result, r, kAsconCtrDriver);
    } else {
      throw FormatError("unknown section [" + kind + "]");
    }
  });
}

KatReport run_kat_suite(KatSuite suite, const std::filesystem::path& dir) {
  KatReport report;
  if (suite == KatSuite::all || suite == KatSuite::ascon) {
    report.files.push_back(run_ascon_hash_kat(dir / kAsconHashKatFile));
    report.files.push_back(run_ascon_aead_kat(dir / kAsconAeadKatFile));
  }
  if (suite == KatSuite::all || suite == KatSuite::drbg) {
    report.files.push_back(run_sha256_hash_drbg_kat(dir / kHashDrbgKatFile));
    report.files.push_back(run_sha256_hmac_drbg_kat(dir / kHmacDrbgKatFile));
    report.files.push_back(run_aes128_ctr_drbg_kat(dir / kCtrDrbgKatFile));
    report.files.push_back(run_ascon_drbg_kat(dir / kAsconDrbgKatFile));
  }
  return report;
}

}  // namespace ascon_drbg
