#include "ascon_drbg/hmac_drbg.hpp"

#include "ascon_drbg/primitives.hpp"
#include "hmac_drbg_impl.hpp"

namespace ascon_drbg {

KeyValue hmac_update(const OptionalBits& provided_data, const BitString& k, const BitString& v) {
  return detail::hmac_update<AsconHash256Fn>(provided_data, k, v);
}

GenerateResult<HmacDrbgState> hmac_generate(const HmacDrbgState& state, std::size_t output_length,
                                            const OptionalBits& add_input) {
  return detail::hmac_generate<AsconHash256Fn>(state, output_length, add_input);
}

HmacDrbgState hmac_instantiate(EntropySource& entropy, const OptionalBits& personalization) {
  const BitString entropy_input = entropy.get_entropy(kHmacEntropyBits);
  const BitString nonce = entropy.get_entropy(kHmacNonceBits);
  return hmac_instantiate(entropy_input, nonce, personalization);
}

HmacDrbgState hmac_instantiate(const BitString& entropy_input, const BitString& nonce,
                               const OptionalBits& personalization) {
  return detail::hmac_instantiate<AsconHash256Fn>(entropy_input, nonce, personalization);
}

HmacDrbgState hmac_reseed(const HmacDrbgState& state, EntropySource& entropy,
                          const OptionalBits& add_input) {
  if (!detail::hmac_state_ok(state)) throw ParameterError("reseed of an uninstantiated HMAC_DRBG");
  return hmac_reseed(state, entropy.get_entropy(kHmacEntropyBits), add_input);
}

HmacDrbgState hmac_reseed(const HmacDrbgState& state, const BitString& entropy_input,
                          const OptionalBits& add_input) {
  return detail::hmac_reseed<AsconHash256Fn>(state, entropy_input, add_input);
}

}  // namespace ascon_drbg
