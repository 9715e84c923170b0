#pragma once

#include <cstddef>
#include <cstdint>

#include "ascon_drbg/bitstring.hpp"
#include "ascon_drbg/drbg.hpp"
#include "ascon_drbg/entropy.hpp"

namespace ascon_drbg {

inline constexpr std::size_t kHashSeedLen = 440;
inline constexpr std::size_t kHashEntropyBits = 256;
inline constexpr std::size_t kHashNonceBits = 128;
/// The df counter is one byte, so at most 255 digests.
inline constexpr std::size_t kHashDfMaxBits = 255 * 256;

struct HashDrbgState {
  BitString v;  // kHashSeedLen bits
  BitString c;  // kHashSeedLen bits
  std::uint64_t reseed_counter = 0;

  friend bool operator==(const HashDrbgState&, const HashDrbgState&) = default;
};

struct DfResult {
  DrbgStatus status = DrbgStatus::error_flag;
  BitString bits;
};

// Hash inputs must be whole bytes; unaligned strings raise LengthError.

/// Ascon-Hash256 derivation function. error_flag when output_length is 0 or
/// above kHashDfMaxBits.
DfResult ascon_hash_df(const BitString& input, std::size_t output_length);

/// leftmost(H(V) || H(V+1) || ..., output_length). V is not modified.
BitString ascon_hashgen(std::size_t output_length, const BitString& v);

GenerateResult<HashDrbgState> hash_generate(const HashDrbgState& state, std::size_t output_length,
                                            const OptionalBits& add_input = {});

/// Draws kHashEntropyBits of entropy and then a kHashNonceBits nonce.
HashDrbgState hash_instantiate(EntropySource& entropy, const OptionalBits& personalization = {});
HashDrbgState hash_instantiate(const BitString& entropy_input, const BitString& nonce,
                               const OptionalBits& personalization = {});

/// Draws kHashEntropyBits of entropy. Throws ParameterError on an
/// uninstantiated state.
HashDrbgState hash_reseed(const HashDrbgState& state, EntropySource& entropy,
                          const OptionalBits& add_input = {});
HashDrbgState hash_reseed(const HashDrbgState& state, const BitString& entropy_input,
                          const OptionalBits& add_input = {});

}  // namespace ascon_drbg
