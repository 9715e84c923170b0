#pragma once

#include <cstdint>

#include "ascon_drbg/errors.hpp"
#include "ascon_drbg/hmac_drbg.hpp"

namespace ascon_drbg::detail {

inline bool hmac_state_ok(const HmacDrbgState& s) {
  return s.reseed_counter != 0 && s.k.size() == kHmacOutLen && s.v.size() == kHmacOutLen;
}

template <typename Hash>
BitString hmac_bits(const BitString& key, const BitString& message) {
  return BitString::from_bytes(hmac<Hash>(key.bytes(), message.bytes()));
}

template <typename Hash>
KeyValue hmac_update(const OptionalBits& provided_data, const BitString& k, const BitString& v) {
  const BitString data = provided_data.value_or(BitString{});
  KeyValue out;
  out.k = hmac_bits<Hash>(k, concat(v, int_encode(0x00, 8), data));
  out.v = hmac_bits<Hash>(out.k, v);
  if (!is_present(provided_data)) return out;
  out.k = hmac_bits<Hash>(out.k, concat(out.v, int_encode(0x01, 8), data));
  out.v = hmac_bits<Hash>(out.k, out.v);
  return out;
}

template <typename Hash>
GenerateResult<HmacDrbgState> hmac_generate(const HmacDrbgState& state, std::size_t output_length,
                                            const OptionalBits& add_input) {
  if (!hmac_state_ok(state) || output_length > DrbgLimits::kMaxBitsPerRequest) {
    return {DrbgStatus::error_flag, {}, state};
  }
  if (state.reseed_counter > DrbgLimits::kReseedInterval) {
    return {DrbgStatus::reseed_required, {}, state};
  }

  KeyValue kv{state.k, state.v};
  if (is_present(add_input)) kv = hmac_update<Hash>(add_input, kv.k, kv.v);

  BitString temp;
  while (temp.size() < output_length) {
    kv.v = hmac_bits<Hash>(kv.k, kv.v);
    temp.append(kv.v);
  }
  BitString bits = leftmost(temp, output_length);

  kv = hmac_update<Hash>(is_present(add_input) ? add_input : OptionalBits{}, kv.k, kv.v);
  return {DrbgStatus::success, std::move(bits),
          {std::move(kv.k), std::move(kv.v), state.reseed_counter + 1}};
}

template <typename Hash>
HmacDrbgState hmac_instantiate(const BitString& entropy_input, const BitString& nonce,
                               const OptionalBits& personalization) {
  const BitString k = BitString::from_bytes(Bytes(kHmacOutLen / 8, 0x00));
  const BitString v = BitString::from_bytes(Bytes(kHmacOutLen / 8, 0x01));
  KeyValue kv = hmac_update<Hash>(
      concat(entropy_input, nonce, personalization.value_or(BitString{})), k, v);
  return {std::move(kv.k), std::move(kv.v), 1};
}

template <typename Hash>
HmacDrbgState hmac_reseed(const HmacDrbgState& state, const BitString& entropy_input,
                          const OptionalBits& add_input) {
  if (!hmac_state_ok(state)) throw ParameterError("reseed of an uninstantiated HMAC_DRBG");
  KeyValue kv =
      hmac_update<Hash>(concat(entropy_input, add_input.value_or(BitString{})), state.k, state.v);
  return {std::move(kv.k), std::move(kv.v), 1};
}

}  // namespace ascon_drbg::detail
