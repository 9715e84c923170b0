#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "ascon_drbg/bitstring.hpp"
#include "ascon_drbg/errors.hpp"

namespace ascon_drbg {

/// The 320-bit Ascon state as five 64-bit words.
///
/// The byte codec follows the standard: S0 first, each word little-endian.
struct AsconState {
  std::array<std::uint64_t, 5> x{};

  static constexpr std::size_t kBytes = 40;

  std::array<std::uint8_t, kBytes> serialize() const noexcept;
  /// Throws ParameterError unless `bytes` is exactly 40 bytes long.
  static AsconState deserialize(std::span<const std::uint8_t> bytes);

  friend bool operator==(const AsconState&, const AsconState&) = default;
};

/// In-place p^rounds. Only the standard's p8 and p12 are accepted.
void ascon_permute_inplace(AsconState& state, int rounds);

/// Returns p^rounds(state). Throws ParameterError unless rounds is 8 or 12.
AsconState ascon_permute(AsconState state, int rounds);

/// A fixed 128-bit value. The tag parameter keeps keys, nonces and tags from
/// being mixed up at call sites.
template <typename Tag>
class Block128 {
 public:
  static constexpr std::size_t kBytes = 16;

  Block128() = default;
  explicit Block128(const std::array<std::uint8_t, kBytes>& bytes) : bytes_(bytes) {}

  /// Throws ParameterError unless `bytes` holds exactly 16 bytes.
  static Block128 from_bytes(std::span<const std::uint8_t> bytes) {
    if (bytes.size() != kBytes) {
      throw ParameterError("expected a 128-bit value, got " + std::to_string(bytes.size() * 8) +
                           " bits");
    }
    Block128 b;
    std::copy(bytes.begin(), bytes.end(), b.bytes_.begin());
    return b;
  }

  /// Throws ParameterError unless `bits` is exactly 128 bits long.
  static Block128 from_bits(const BitString& bits) {
    if (bits.size() != kBytes * 8) {
      throw ParameterError("expected a 128-bit value, got " + std::to_string(bits.size()) +
                           " bits");
    }
    return from_bytes(bits.bytes());
  }

  static Block128 from_hex(std::string_view hex) { return from_bytes(ascon_drbg::from_hex(hex)); }

  const std::array<std::uint8_t, kBytes>& bytes() const noexcept { return bytes_; }
  BitString to_bits() const { return BitString::from_bytes(bytes_); }

  friend bool operator==(const Block128&, const Block128&) = default;

 private:
  std::array<std::uint8_t, kBytes> bytes_{};
};

using AeadKey = Block128<struct AeadKeyTag>;
using AeadNonce = Block128<struct AeadNonceTag>;
using AeadTag = Block128<struct AeadTagTag>;

using Digest256 = std::array<std::uint8_t, 32>;

/// Incremental Ascon-Hash256.
class AsconHash256 {
 public:
  static constexpr std::size_t kDigestBytes = 32;

  AsconHash256() noexcept;

  AsconHash256& update(std::span<const std::uint8_t> data) noexcept;
  /// Pads, squeezes and returns the digest. The object must not be reused.
  Digest256 finalize() noexcept;

 private:
  AsconState state_;
  std::array<std::uint8_t, 8> buffer_{};
  std::size_t buffered_ = 0;
};

Digest256 ascon_hash256(std::span<const std::uint8_t> message);

struct AeadCiphertext {
  Bytes ciphertext;
  AeadTag tag;
};

/// Ascon-AEAD128 encryption. |ciphertext| == |plaintext|.
AeadCiphertext aead128_encrypt(const AeadKey& key, const AeadNonce& nonce,
                               std::span<const std::uint8_t> associated_data,
                               std::span<const std::uint8_t> plaintext);

}  // namespace ascon_drbg
