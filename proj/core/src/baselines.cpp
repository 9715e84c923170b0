#include "ascon_drbg/baselines.hpp"

#include "ascon_drbg/primitives.hpp"
#include "ctr_drbg_impl.hpp"
#include "hash_drbg_impl.hpp"
#include "hmac_drbg_impl.hpp"

namespace ascon_drbg {

DfResult sha256_hash_df(const BitString& input, std::size_t output_length) {
  return detail::hash_df<Sha256Fn>(input, output_length);
}

GenerateResult<HashDrbgState> sha256_hash_generate(const HashDrbgState& state,
                                                   std::size_t output_length,
                                                   const OptionalBits& add_input) {
  return detail::hash_generate<Sha256Fn>(state, output_length, add_input);
}

HashDrbgState sha256_hash_instantiate(EntropySource& entropy, const OptionalBits& personalization) {
  const BitString entropy_input = entropy.get_entropy(kHashEntropyBits);
  const BitString nonce = entropy.get_entropy(kHashNonceBits);
  return sha256_hash_instantiate(entropy_input, nonce, personalization);
}

HashDrbgState sha256_hash_instantiate(const BitString& entropy_input, const BitString& nonce,
                                      const OptionalBits& personalization) {
  return detail::hash_instantiate<Sha256Fn>(entropy_input, nonce, personalization);
}

HashDrbgState sha256_hash_reseed(const HashDrbgState& state, EntropySource& entropy,
                                 const OptionalBits& add_input) {
  if (!detail::hash_state_ok(state)) throw ParameterError("reseed of an uninstantiated Hash_DRBG");
  return sha256_hash_reseed(state, entropy.get_entropy(kHashEntropyBits), add_input);
}

HashDrbgState sha256_hash_reseed(const HashDrbgState& state, const BitString& entropy_input,
                                 const OptionalBits& add_input) {
  return detail::hash_reseed<Sha256Fn>(state, entropy_input, add_input);
}

GenerateResult<HmacDrbgState> sha256_hmac_generate(const HmacDrbgState& state,
                                                   std::size_t output_length,
                                                   const OptionalBits& add_input) {
  return detail::hmac_generate<Sha256Fn>(state, output_length, add_input);
}

HmacDrbgState sha256_hmac_instantiate(EntropySource& entropy, const OptionalBits& personalization) {
  const BitString entropy_input = entropy.get_entropy(kHmacEntropyBits);
  const BitString nonce = entropy.get_entropy(kHmacNonceBits);
  return sha256_hmac_instantiate(entropy_input, nonce, personalization);
}

HmacDrbgState sha256_hmac_instantiate(const BitString& entropy_input, const BitString& nonce,
                                      const OptionalBits& personalization) {
  return detail::hmac_instantiate<Sha256Fn>(entropy_input, nonce, personalization);
}

HmacDrbgState sha256_hmac_reseed(const HmacDrbgState& state, EntropySource& entropy,
                                 const OptionalBits& add_input) {
  if (!detail::hmac_state_ok(state)) throw ParameterError("reseed of an uninstantiated HMAC_DRBG");
  return sha256_hmac_reseed(state, entropy.get_entropy(kHmacEntropyBits), add_input);
}

HmacDrbgState sha256_hmac_reseed(const HmacDrbgState& state, const BitString& entropy_input,
                                 const OptionalBits& add_input) {
  return detail::hmac_reseed<Sha256Fn>(state, entropy_input, add_input);
}

BitString aes128_block_encrypt(const BitString& k, const BitString& v) {
  detail::check_width(k, kCtrBlockLen, "K");
  detail::check_width(v, kCtrBlockLen, "V");
  Block16 key{};
  Block16 block{};
  std::copy_n(k.bytes().begin(), key.size(), key.begin());
  std::copy_n(v.bytes().begin(), block.size(), block.begin());
  return BitString::from_bytes(aes128_encrypt_block(key, block));
}

namespace {

constexpr auto aes_encryptor = [](const BitString& k, const BitString& v) {
  return aes128_block_encrypt(k, v);
};

}  // namespace

GenerateResult<AesCtrDrbgState> aes128_ctr_generate(const AesCtrDrbgState& state,
                                                    std::size_t output_length,
                                                    const OptionalBits& add_input) {
  return detail::ctr_generate(state, output_length, add_input, aes_encryptor);
}

AesCtrDrbgState aes128_ctr_instantiate(EntropySource& entropy, const OptionalBits& personalization,
                                       std::size_t ctr_len) {
  detail::check_ctr_len(ctr_len);
  return aes128_ctr_instantiate(entropy.get_entropy(kCtrEntropyBits), personalization, ctr_len);
}

AesCtrDrbgState aes128_ctr_instantiate(const BitString& entropy_input,
                                       const OptionalBits& personalization, std::size_t ctr_len) {
  detail::check_ctr_len(ctr_len);
  AesCtrDrbgState s;
  s.k = BitString::zeros(kCtrBlockLen);
  s.v = BitString::zeros(kCtrBlockLen);
  s.ctr_len = ctr_len;
  detail::ctr_seed(s, entropy_input, personalization, "personalization string", aes_encryptor);
  return s;
}

AesCtrDrbgState aes128_ctr_reseed(const AesCtrDrbgState& state, EntropySource& entropy,
                                  const OptionalBits& add_input) {
  if (!detail::ctr_state_ok(state)) throw ParameterError("reseed of an uninstantiated CTR_DRBG");
  return aes128_ctr_reseed(state, entropy.get_entropy(kCtrEntropyBits), add_input);
}

AesCtrDrbgState aes128_ctr_reseed(const AesCtrDrbgState& state, const BitString& entropy_input,
                                  const OptionalBits& add_input) {
  if (!detail::ctr_state_ok(state)) throw ParameterError("reseed of an uninstantiated CTR_DRBG");
  AesCtrDrbgState s = state;
  detail::ctr_seed(s, entropy_input, add_input, "additional input", aes_encryptor);
  return s;
}

}  // namespace ascon_drbg
