#pragma once

#include <string>

#include "ascon_drbg/ctr_drbg.hpp"
#include "ascon_drbg/errors.hpp"

namespace ascon_drbg::detail {

inline bool ctr_len_ok(std::size_t ctr_len) {
  return ctr_len >= kCtrMinCtrLen && ctr_len <= kCtrBlockLen;
}

inline void check_ctr_len(std::size_t ctr_len) {
  if (!ctr_len_ok(ctr_len)) {
    throw ParameterError("ctr_len must lie in [4, 128], got " + std::to_string(ctr_len));
  }
}

inline void check_width(const BitString& s, std::size_t bits, const char* what) {
  if (s.size() != bits) {
    throw ParameterError(std::string(what) + " must be " + std::to_string(bits) + " bits, got " +
                         std::to_string(s.size()));
  }
}

/// Right-pads an optional input to seedlen. Longer inputs are rejected.
inline BitString pad_to_seedlen(const OptionalBits& s, const char* what) {
  if (!s) return BitString::zeros(kCtrSeedLen);
  if (s->size() > kCtrSeedLen) {
    throw ParameterError(std::string(what) + " exceeds 256 bits");
  }
  return concat(*s, BitString::zeros(kCtrSeedLen - s->size()));
}

inline BitString increment(const BitString& v, std::size_t ctr_len) {
  check_ctr_len(ctr_len);
  check_width(v, kCtrBlockLen, "V");
  const BitString one = BitString::from_binary("1");
  if (ctr_len < kCtrBlockLen) {
    const BitString inc = add_mod_pow2(rightmost(v, ctr_len), one, ctr_len);
    return concat(leftmost(v, kCtrBlockLen - ctr_len), inc);
  }
  return add_mod_pow2(v, one, kCtrBlockLen);
}

/// `encrypt(K, V)` is the block-encrypt function for the mechanism.
template <typename Encrypt>
KeyValue ctr_update(const Encrypt& encrypt, const BitString& provided_data, const BitString& k,
                    BitString v, std::size_t ctr_len) {
  check_width(provided_data, kCtrSeedLen, "provided data");
  BitString temp;
  while (temp.size() < kCtrSeedLen) {
    v = increment(v, ctr_len);
    temp.append(encrypt(k, v));
  }
  temp = leftmost(temp, kCtrSeedLen) ^ provided_data;
  return {leftmost(temp, kCtrBlockLen), rightmost(temp, kCtrBlockLen)};
}

template <typename State>
bool ctr_state_ok(const State& s) {
  return s.reseed_counter != 0 && s.k.size() == kCtrBlockLen && s.v.size() == kCtrBlockLen &&
         ctr_len_ok(s.ctr_len);
}

template <typename State, typename Encrypt>
GenerateResult<State> ctr_generate(const State& state, std::size_t output_length,
                                   const OptionalBits& add_input, const Encrypt& encrypt) {
  if (!ctr_state_ok(state) || output_length > DrbgLimits::kMaxBitsPerRequest) {
    return {DrbgStatus::error_flag, {}, state};
  }
  if (state.reseed_counter > DrbgLimits::kReseedInterval) {
    return {DrbgStatus::reseed_required, {}, state};
  }

  const OptionalBits add = is_present(add_input) ? add_input : OptionalBits{};
  const BitString padded_add = pad_to_seedlen(add, "additional input");

  KeyValue kv{state.k, state.v};
  if (add) kv = ctr_update(encrypt, padded_add, kv.k, kv.v, state.ctr_len);

  BitString temp;
  while (temp.size() < output_length) {
    kv.v = increment(kv.v, state.ctr_len);
    temp.append(encrypt(kv.k, kv.v));
  }
  BitString bits = leftmost(temp, output_length);

  kv = ctr_update(encrypt, padded_add, kv.k, kv.v, state.ctr_len);

  State next = state;
  next.k = std::move(kv.k);
  next.v = std::move(kv.v);
  next.reseed_counter = state.reseed_counter + 1;
  return {DrbgStatus::success, std::move(bits), std::move(next)};
}

/// Fills K, V and reseed_counter of `state` from entropy ^ pad(extra).
template <typename State, typename Encrypt>
void ctr_seed(State& state, const BitString& entropy_input, const OptionalBits& extra,
              const char* what, const Encrypt& encrypt) {
  check_width(entropy_input, kCtrEntropyBits, "entropy input");
  const BitString seed_material = entropy_input ^ pad_to_seedlen(extra, what);
  KeyValue kv = ctr_update(encrypt, seed_material, state.k, state.v, state.ctr_len);
  state.k = std::move(kv.k);
  state.v = std::move(kv.v);
  state.reseed_counter = 1;
}

}  // namespace ascon_drbg::detail
