#include "ascon_drbg/ctr_drbg.hpp"

#include "ctr_drbg_impl.hpp"

namespace ascon_drbg {

namespace {

auto ascon_encryptor(const AeadNonce& n, ByteSpan a) {
  return [&n, a](const BitString& k, const BitString& v) { return ascon_block_encrypt(k, n, a, v); };
}

}  // namespace

BitString ascon_block_encrypt(const BitString& k, const AeadNonce& n, ByteSpan a, const BitString& v) {
  detail::check_width(v, kCtrBlockLen, "V");
  const auto out = aead128_encrypt(AeadKey::from_bits(k), n, a, v.bytes());
  return BitString::from_bytes(out.ciphertext);
}

BitString ctr_increment(const BitString& v, std::size_t ctr_len) {
  return detail::increment(v, ctr_len);
}

KeyValue ctr_update(const BitString& provided_data, const BitString& k, const BitString& v,
                    const AeadNonce& n, ByteSpan a, std::size_t ctr_len) {
  return detail::ctr_update(ascon_encryptor(n, a), provided_data, k, v, ctr_len);
}

GenerateResult<CtrDrbgState> ctr_generate(const CtrDrbgState& state, std::size_t output_length,
                                          const OptionalBits& add_input) {
  return detail::ctr_generate(state, output_length, add_input, ascon_encryptor(state.n, state.a));
}

CtrDrbgState ctr_instantiate(EntropySource& entropy, const OptionalBits& personalization,
                             Bytes associated_data, std::size_t ctr_len) {
  detail::check_ctr_len(ctr_len);
  const BitString entropy_input = entropy.get_entropy(kCtrEntropyBits);
  const AeadNonce n = AeadNonce::from_bits(entropy.get_entropy(kCtrNonceBits));
  return ctr_instantiate(entropy_input, n, personalization, std::move(associated_data), ctr_len);
}

CtrDrbgState ctr_instantiate(const BitString& entropy_input, const AeadNonce& n,
                             const OptionalBits& personalization, Bytes associated_data,
                             std::size_t ctr_len) {
  detail::check_ctr_len(ctr_len);
  CtrDrbgState s;
  s.k = BitString::zeros(kCtrBlockLen);
  s.v = BitString::zeros(kCtrBlockLen);
  s.n = n;
  s.a = std::move(associated_data);
  s.ctr_len = ctr_len;
  detail::ctr_seed(s, entropy_input, personalization, "personalization string",
                   ascon_encryptor(s.n, s.a));
  return s;
}

CtrDrbgState ctr_reseed(const CtrDrbgState& state, EntropySource& entropy,
                        const OptionalBits& add_input) {
  if (!detail::ctr_state_ok(state)) throw ParameterError("reseed of an uninstantiated CTR_DRBG");
  return ctr_reseed(state, entropy.get_entropy(kCtrEntropyBits), add_input);
}

CtrDrbgState ctr_reseed(const CtrDrbgState& state, const BitString& entropy_input,
                        const OptionalBits& add_input) {
  if (!detail::ctr_state_ok(state)) throw ParameterError("reseed of an uninstantiated CTR_DRBG");
  CtrDrbgState s = state;
  detail::ctr_seed(s, entropy_input, add_input, "additional input", ascon_encryptor(s.n, s.a));
  return s;
}

}  // namespace ascon_drbg
