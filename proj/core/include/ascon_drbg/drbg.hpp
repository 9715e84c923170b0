#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "ascon_drbg/bitstring.hpp"

namespace ascon_drbg {

enum class DrbgStatus { success, error_flag, reseed_required };

constexpr std::string_view to_string(DrbgStatus s) noexcept {
  switch (s) {
    case DrbgStatus::success:
      return "SUCCESS";
    case DrbgStatus::error_flag:
      return "ERROR_FLAG";
    case DrbgStatus::reseed_required:
      return "RESEED_REQUIRED";
  }
  return "?";
}

struct DrbgLimits {
  /// generate refuses once reseed_counter exceeds this value.
  static constexpr std::uint64_t kReseedInterval = std::uint64_t{1} << 48;
  static constexpr std::size_t kMaxBitsPerRequest = std::size_t{1} << 19;
};

/// Additional input and personalization strings are optional. An empty
/// string is the same as no string at all.
using OptionalBits = std::optional<BitString>;

inline bool is_present(const OptionalBits& s) noexcept { return s.has_value() && !s->empty(); }

/// What every generate algorithm returns. `bits` is empty and `state` is the
/// input state whenever status is not success.
template <typename State>
struct GenerateResult {
  DrbgStatus status = DrbgStatus::error_flag;
  BitString bits;
  State state;
};

/// (K, V) pair produced by the HMAC and CTR update functions.
struct KeyValue {
  BitString k;
  BitString v;

  friend bool operator==(const KeyValue&, const KeyValue&) = default;
};

}  // namespace ascon_drbg
