#pragma once

#include <cstdint>
#include <span>

#include "ascon_drbg/errors.hpp"
#include "ascon_drbg/hash_drbg.hpp"

namespace ascon_drbg::detail {

inline BitString digest_bits(const Digest256& d) { return BitString::from_bytes(d); }

inline std::span<const std::uint8_t> one_byte(const std::uint8_t& b) { return {&b, 1}; }

inline bool hash_state_ok(const HashDrbgState& s) {
  return s.reseed_counter != 0 && s.v.size() == kHashSeedLen && s.c.size() == kHashSeedLen;
}

template <typename Hash>
DfResult hash_df(const BitString& input, std::size_t output_length) {
  if (output_length == 0 || output_length > kHashDfMaxBits) return {DrbgStatus::error_flag, {}};

  const std::size_t blocks = (output_length + 255) / 256;
  const BitString length_field = int_encode(output_length, 32);
  BitString temp;
  for (std::size_t i = 1; i <= blocks; ++i) {
    const auto counter = static_cast<std::uint8_t>(i);
    temp.append(digest_bits(Hash::digest({one_byte(counter), length_field.bytes(), input.bytes()})));
  }
  return {DrbgStatus::success, leftmost(temp, output_length)};
}

template <typename Hash>
BitString hashgen(std::size_t output_length, const BitString& v) {
  const std::size_t m = (output_length + 255) / 256;
  const BitString one = int_encode(1, 8);
  BitString data = v;
  BitString w;
  for (std::size_t i = 0; i < m; ++i) {
    w.append(digest_bits(Hash::digest({data.bytes()})));
    data = add_mod_pow2(data, one, kHashSeedLen);
  }
  return leftmost(w, output_length);
}

template <typename Hash>
GenerateResult<HashDrbgState> hash_generate(const HashDrbgState& state, std::size_t output_length,
                                            const OptionalBits& add_input) {
  if (!hash_state_ok(state) || output_length > DrbgLimits::kMaxBitsPerRequest) {
    return {DrbgStatus::error_flag, {}, state};
  }
  if (state.reseed_counter > DrbgLimits::kReseedInterval) {
    return {DrbgStatus::reseed_required, {}, state};
  }

  BitString v = state.v;
  if (is_present(add_input)) {
    const std::uint8_t prefix = 0x02;
    const BitString w = digest_bits(Hash::digest({one_byte(prefix), v.bytes(), add_input->bytes()}));
    v = add_mod_pow2(v, w, kHashSeedLen);
  }

  BitString bits = hashgen<Hash>(output_length, v);

  const std::uint8_t prefix = 0x03;
  const BitString h = digest_bits(Hash::digest({one_byte(prefix), v.bytes()}));
  v = add_mod_pow2(v, h, kHashSeedLen);
  v = add_mod_pow2(v, state.c, kHashSeedLen);
  v = add_mod_pow2(v, int_encode(state.reseed_counter, 64), kHashSeedLen);

  return {DrbgStatus::success, std::move(bits), {std::move(v), state.c, state.reseed_counter + 1}};
}

template <typename Hash>
HashDrbgState hash_state_from_seed(const BitString& seed_material) {
  HashDrbgState s;
  s.v = hash_df<Hash>(seed_material, kHashSeedLen).bits;
  s.c = hash_df<Hash>(concat(int_encode(0x00, 8), s.v), kHashSeedLen).bits;
  s.reseed_counter = 1;
  return s;
}

template <typename Hash>
HashDrbgState hash_instantiate(const BitString& entropy_input, const BitString& nonce,
                               const OptionalBits& personalization) {
  return hash_state_from_seed<Hash>(
      concat(entropy_input, nonce, personalization.value_or(BitString{})));
}

template <typename Hash>
HashDrbgState hash_reseed(const HashDrbgState& state, const BitString& entropy_input,
                          const OptionalBits& add_input) {
  if (!hash_state_ok(state)) throw ParameterError("reseed of an uninstantiated Hash_DRBG");
  return hash_state_from_seed<Hash>(
      concat(int_encode(0x01, 8), state.v, entropy_input, add_input.value_or(BitString{})));
}

}  // namespace ascon_drbg::detail
