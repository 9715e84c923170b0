#include "ascon_drbg/hash_drbg.hpp"

#include "ascon_drbg/primitives.hpp"
#include "hash_drbg_impl.hpp"

namespace ascon_drbg {

DfResult ascon_hash_df(const BitString& input, std::size_t output_length) {
  return detail::hash_df<AsconHash256Fn>(input, output_length);
}

BitString ascon_hashgen(std::size_t output_length, const BitString& v) {
  return detail::hashgen<AsconHash256Fn>(output_length, v);
}

GenerateResult<HashDrbgState> hash_generate(const HashDrbgState& state, std::size_t output_length,
                                            const OptionalBits& add_input) {
  return detail::hash_generate<AsconHash256Fn>(state, output_length, add_input);
}

HashDrbgState hash_instantiate(EntropySource& entropy, const OptionalBits& personalization) {
  const BitString entropy_input = entropy.get_entropy(kHashEntropyBits);
  const BitString nonce = entropy.get_entropy(kHashNonceBits);
  return hash_instantiate(entropy_input, nonce, personalization);
}

HashDrbgState hash_instantiate(const BitString& entropy_input, const BitString& nonce,
                               const OptionalBits& personalization) {
  return detail::hash_instantiate<AsconHash256Fn>(entropy_input, nonce, personalization);
}

HashDrbgState hash_reseed(const HashDrbgState& state, EntropySource& entropy,
                          const OptionalBits& add_input) {
  if (!detail::hash_state_ok(state)) throw ParameterError("reseed of an uninstantiated Hash_DRBG");
  return hash_reseed(state, entropy.get_entropy(kHashEntropyBits), add_input);
}

HashDrbgState hash_reseed(const HashDrbgState& state, const BitString& entropy_input,
                          const OptionalBits& add_input) {
  return detail::hash_reseed<AsconHash256Fn>(state, entropy_input, add_input);
}

}  // namespace ascon_drbg
