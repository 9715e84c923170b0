#pragma once

#include <cstddef>
#include <cstdint>

#include "ascon_drbg/bitstring.hpp"
#include "ascon_drbg/drbg.hpp"
#include "ascon_drbg/entropy.hpp"
#include "ascon_drbg/hmac.hpp"

namespace ascon_drbg {

inline constexpr std::size_t kHmacOutLen = 256;
inline constexpr std::size_t kHmacEntropyBits = 256;
inline constexpr std::size_t kHmacNonceBits = 128;

struct HmacDrbgState {
  BitString k;  // kHmacOutLen bits
  BitString v;  // kHmacOutLen bits
  std::uint64_t reseed_counter = 0;

  friend bool operator==(const HmacDrbgState&, const HmacDrbgState&) = default;
};

/// The HMAC_DRBG update function over Ascon-Hash256 HMAC. An absent (or
/// empty) provided_data runs the first half only.
KeyValue hmac_update(const OptionalBits& provided_data, const BitString& k, const BitString& v);

GenerateResult<HmacDrbgState> hmac_generate(const HmacDrbgState& state, std::size_t output_length,
                                            const OptionalBits& add_input = {});

/// Draws kHmacEntropyBits of entropy and then a kHmacNonceBits nonce.
HmacDrbgState hmac_instantiate(EntropySource& entropy, const OptionalBits& personalization = {});
HmacDrbgState hmac_instantiate(const BitString& entropy_input, const BitString& nonce,
                               const OptionalBits& personalization = {});

/// Throws ParameterError on an uninstantiated state.
HmacDrbgState hmac_reseed(const HmacDrbgState& state, EntropySource& entropy,
                          const OptionalBits& add_input = {});
HmacDrbgState hmac_reseed(const HmacDrbgState& state, const BitString& entropy_input,
                          const OptionalBits& add_input = {});

}  // namespace ascon_drbg
