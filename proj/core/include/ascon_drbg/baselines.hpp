#pragma once

#include <cstddef>
#include <cstdint>

#include "ascon_drbg/ctr_drbg.hpp"
#include "ascon_drbg/drbg.hpp"
#include "ascon_drbg/entropy.hpp"
#include "ascon_drbg/hash_drbg.hpp"
#include "ascon_drbg/hmac_drbg.hpp"

// Conventional Hash_DRBG and HMAC_DRBG over SHA-256 and CTR_DRBG (no df) over
// AES-128. They share the state types, limits and call shapes of the Ascon
// mechanisms.

namespace ascon_drbg {

DfResult sha256_hash_df(const BitString& input, std::size_t output_length);

GenerateResult<HashDrbgState> sha256_hash_generate(const HashDrbgState& state,
                                                   std::size_t output_length,
                                                   const OptionalBits& add_input = {});
HashDrbgState sha256_hash_instantiate(EntropySource& entropy,
                                      const OptionalBits& personalization = {});
HashDrbgState sha256_hash_instantiate(const BitString& entropy_input, const BitString& nonce,
                                      const OptionalBits& personalization = {});
HashDrbgState sha256_hash_reseed(const HashDrbgState& state, EntropySource& entropy,
                                 const OptionalBits& add_input = {});
HashDrbgState sha256_hash_reseed(const HashDrbgState& state, const BitString& entropy_input,
                                 const OptionalBits& add_input = {});

GenerateResult<HmacDrbgState> sha256_hmac_generate(const HmacDrbgState& state,
                                                   std::size_t output_length,
                                                   const OptionalBits& add_input = {});
HmacDrbgState sha256_hmac_instantiate(EntropySource& entropy,
                                      const OptionalBits& personalization = {});
HmacDrbgState sha256_hmac_instantiate(const BitString& entropy_input, const BitString& nonce,
                                      const OptionalBits& personalization = {});
HmacDrbgState sha256_hmac_reseed(const HmacDrbgState& state, EntropySource& entropy,
                                 const OptionalBits& add_input = {});
HmacDrbgState sha256_hmac_reseed(const HmacDrbgState& state, const BitString& entropy_input,
                                 const OptionalBits& add_input = {});

struct AesCtrDrbgState {
  BitString k;  // 128 bits
  BitString v;  // 128 bits
  std::size_t ctr_len = kCtrDefaultCtrLen;
  std::uint64_t reseed_counter = 0;

  friend bool operator==(const AesCtrDrbgState&, const AesCtrDrbgState&) = default;
};

BitString aes128_block_encrypt(const BitString& k, const BitString& v);

GenerateResult<AesCtrDrbgState> aes128_ctr_generate(const AesCtrDrbgState& state,
                                                    std::size_t output_length,
                                                    const OptionalBits& add_input = {});
/// Draws kCtrEntropyBits of entropy; no nonce is used without a df.
AesCtrDrbgState aes128_ctr_instantiate(EntropySource& entropy,
                                       const OptionalBits& personalization = {},
                                       std::size_t ctr_len = kCtrDefaultCtrLen);
AesCtrDrbgState aes128_ctr_instantiate(const BitString& entropy_input,
                                       const OptionalBits& personalization,
                                       std::size_t ctr_len = kCtrDefaultCtrLen);
AesCtrDrbgState aes128_ctr_reseed(const AesCtrDrbgState& state, EntropySource& entropy,
                                  const OptionalBits& add_input = {});
AesCtrDrbgState aes128_ctr_reseed(const AesCtrDrbgState& state, const BitString& entropy_input,
                                  const OptionalBits& add_input = {});

}  // namespace ascon_drbg
