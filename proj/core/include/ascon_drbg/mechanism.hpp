#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string_view>

#include "ascon_drbg/bitstring.hpp"
#include "ascon_drbg/drbg.hpp"
#include "ascon_drbg/entropy.hpp"

namespace ascon_drbg {

/// Uniform stateful wrapper over the six DRBG mechanisms, used by the CLI and
/// the benchmark driver. Instances need exclusive access per call.
class Mechanism {
 public:
  virtual ~Mechanism() = default;

  virtual std::string_view name() const noexcept = 0;
  virtual std::string_view primitive() const noexcept = 0;

  virtual void instantiate(EntropySource& entropy, const OptionalBits& personalization = {}) = 0;
  /// Throws ParameterError before instantiate.
  virtual void reseed(EntropySource& entropy, const OptionalBits& add_input = {}) = 0;
  /// On success `out` receives exactly n_bits; on any other status the
  /// working state is untouched and `out` is cleared.
  virtual DrbgStatus generate(std::size_t n_bits, const OptionalBits& add_input, BitString& out) = 0;

  /// Serialized working-state size in bytes: the state strings plus an
  /// 8-byte reseed counter.
  virtual std::size_t state_bytes() const noexcept = 0;
  virtual std::uint64_t reseed_counter() const noexcept = 0;
};

struct MechanismOptions {
  Bytes associated_data;         // Ascon CTR only
  std::size_t ctr_len = 128;     // both CTR mechanisms
};

inline constexpr std::array<std::string_view, 6> kMechanismNames = {
    "ascon-hash", "ascon-hmac", "ascon-ctr", "sha256-hash", "sha256-hmac", "aes128-ctr"};

/// Throws ParameterError for an unknown name or invalid options.
std::unique_ptr<Mechanism> make_mechanism(std::string_view name, const MechanismOptions& options = {});

}  // namespace ascon_drbg
