#pragma once

#include <cstddef>
#include <cstdint>

#include "ascon_drbg/ascon.hpp"
#include "ascon_drbg/bitstring.hpp"
#include "ascon_drbg/drbg.hpp"
#include "ascon_drbg/entropy.hpp"

namespace ascon_drbg {

inline constexpr std::size_t kCtrBlockLen = 128;
inline constexpr std::size_t kCtrSeedLen = 256;
inline constexpr std::size_t kCtrEntropyBits = 256;
inline constexpr std::size_t kCtrNonceBits = 128;
inline constexpr std::size_t kCtrMinCtrLen = 4;
inline constexpr std::size_t kCtrDefaultCtrLen = 128;

struct CtrDrbgState {
  BitString k;  // 128 bits
  BitString v;  // 128 bits
  AeadNonce n;
  Bytes a;  // associated data, possibly empty
  std::size_t ctr_len = kCtrDefaultCtrLen;
  std::uint64_t reseed_counter = 0;

  friend bool operator==(const CtrDrbgState&, const CtrDrbgState&) = default;
};

/// The ciphertext half of Ascon-AEAD128(K, N, A, V); the tag is dropped.
/// Throws ParameterError unless K and V are 128 bits.
BitString ascon_block_encrypt(const BitString& k, const AeadNonce& n, ByteSpan a, const BitString& v);

/// Adds one to the low ctr_len bits of V, leaving the high bits alone.
/// Throws ParameterError unless 4 <= ctr_len <= 128 and |V| == 128.
BitString ctr_increment(const BitString& v, std::size_t ctr_len);

/// The CTR_DRBG update function. provided_data must be exactly 256 bits.
KeyValue ctr_update(const BitString& provided_data, const BitString& k, const BitString& v,
                    const AeadNonce& n, ByteSpan a, std::size_t ctr_len = kCtrDefaultCtrLen);

/// add_input, when present, may be at most 256 bits (ParameterError).
GenerateResult<CtrDrbgState> ctr_generate(const CtrDrbgState& state, std::size_t output_length,
                                          const OptionalBits& add_input = {});

/// Draws kCtrEntropyBits of entropy and then the 128-bit AEAD nonce N.
/// personalization may be at most 256 bits.
CtrDrbgState ctr_instantiate(EntropySource& entropy, const OptionalBits& personalization = {},
                             Bytes associated_data = {}, std::size_t ctr_len = kCtrDefaultCtrLen);
CtrDrbgState ctr_instantiate(const BitString& entropy_input, const AeadNonce& n,
                             const OptionalBits& personalization = {}, Bytes associated_data = {},
                             std::size_t ctr_len = kCtrDefaultCtrLen);

/// Keeps N and A. Throws ParameterError on an uninstantiated state.
CtrDrbgState ctr_reseed(const CtrDrbgState& state, EntropySource& entropy,
                        const OptionalBits& add_input = {});
CtrDrbgState ctr_reseed(const CtrDrbgState& state, const BitString& entropy_input,
                        const OptionalBits& add_input = {});

}  // namespace ascon_drbg
