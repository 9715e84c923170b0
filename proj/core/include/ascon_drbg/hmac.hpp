#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "ascon_drbg/bitstring.hpp"
#include "ascon_drbg/errors.hpp"
#include "ascon_drbg/primitives.hpp"

namespace ascon_drbg {

struct HmacParams {
  std::size_t block_len = 64;  // B, in bytes
  std::uint8_t ipad = 0x36;
  std::uint8_t opad = 0x5c;

  /// Throws ParameterError if B is shorter than the digest.
  void validate(std::size_t digest_bytes) const {
    if (block_len < digest_bytes) {
      throw ParameterError("HMAC block length " + std::to_string(block_len) +
                           " is shorter than the " + std::to_string(digest_bytes) +
                           "-byte digest");
    }
  }
};

/// K0: the key right-padded with zeros to B bytes, hashing it first when it
/// is longer than B.
template <typename Hash>
Bytes derive_k0(ByteSpan key, const HmacParams& params = {}) {
  params.validate(Hash::kDigestBytes);
  Bytes k0(params.block_len, 0);
  if (key.size() > params.block_len) {
    const auto d = Hash::digest({key});
    std::copy(d.begin(), d.end(), k0.begin());
  } else {
    std::copy(key.begin(), key.end(), k0.begin());
  }
  return k0;
}

/// H((K0 ^ opad) || H((K0 ^ ipad) || message)).
template <typename Hash>
Digest256 hmac(ByteSpan key, ByteSpan message, const HmacParams& params = {}) {
  Bytes pad = derive_k0<Hash>(key, params);
  for (auto& b : pad) b = static_cast<std::uint8_t>(b ^ params.ipad);
  const auto inner = Hash::digest({pad, message});
  const auto flip = static_cast<std::uint8_t>(params.ipad ^ params.opad);
  for (auto& b : pad) b = static_cast<std::uint8_t>(b ^ flip);
  return Hash::digest({pad, inner});
}

/// Ascon-Hash256 HMAC of k over M, as a 256-bit string.
BitString ascon_hmac(ByteSpan key, ByteSpan message, const HmacParams& params = {});

/// K0 for Ascon-Hash256 HMAC.
Bytes ascon_derive_k0(ByteSpan key, const HmacParams& params = {});

}  // namespace ascon_drbg
