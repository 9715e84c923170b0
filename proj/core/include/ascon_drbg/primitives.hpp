#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>

#include "ascon_drbg/ascon.hpp"

namespace ascon_drbg {


// Hash policies used by the Hash and HMAC DRBG templates. `digest` hashes the
// concatenation of its parts without materializing it.

struct AsconHash256Fn {
  static constexpr std::string_view kName = "Ascon-Hash256";
  static constexpr std::size_t kDigestBytes = 32;
  static Digest256 digest(std::initializer_list<ByteSpan> parts);
};

struct Sha256Fn {
  static constexpr std::string_view kName = "SHA-256";
  static constexpr std::size_t kDigestBytes = 32;
  static Digest256 digest(std::initializer_list<ByteSpan> parts);
};

Digest256 sha256(ByteSpan message);

using Block16 = std::array<std::uint8_t, 16>;

/// Single-block AES-128 encryption (ECB of one block).
Block16 aes128_encrypt_block(const Block16& key, const Block16& block);

}  // namespace ascon_drbg
