#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ascon_drbg {

using Bytes = std::vector<std::uint8_t>;
using ByteSpan = std::span<const std::uint8_t>;

/// Lowercase hex, two characters per byte.
std::string to_hex(std::span<const std::uint8_t> bytes);

/// Accepts upper or lower case and ignores surrounding whitespace.
/// Throws FormatError on odd length or non-hex characters.
Bytes from_hex(std::string_view hex);

/// An ordered sequence of bits with a big-endian integer view.
///
/// Bits are stored MSB-first, packed into bytes; the unused low-order bits of
/// a trailing partial byte are kept at zero so that equality and hashing can
/// compare storage directly. Lengths need not be multiples of eight.
class BitString {
 public:
  BitString() = default;

  static BitString zeros(std::size_t bits);
  static BitString from_bytes(std::span<const std::uint8_t> bytes);
  /// The first `bits` bits of `bytes`.
  static BitString from_bytes(std::span<const std::uint8_t> bytes, std::size_t bits);
  static BitString from_hex(std::string_view hex);
  /// Parses a string of '0' and '1' characters, MSB first.
  static BitString from_binary(std::string_view binary);

  std::size_t size() const noexcept { return bits_; }
  bool empty() const noexcept { return bits_ == 0; }
  bool byte_aligned() const noexcept { return bits_ % 8 == 0; }

  bool bit(std::size_t index) const;

  /// Packed storage, ceil(size()/8) bytes; trailing pad bits are zero.
  std::span<const std::uint8_t> storage() const noexcept { return bytes_; }

  /// Whole-byte view; throws LengthError when size() is not a multiple of 8.
  std::span<const std::uint8_t> bytes() const;
  Bytes to_bytes() const;
  std::string to_hex() const;
  std::string to_binary() const;

  BitString& append(const BitString& tail);
  BitString& append_byte(std::uint8_t byte);

  std::size_t popcount() const noexcept;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  void append_bits(std::span<const std::uint8_t> src, std::size_t bits);

  Bytes bytes_;
  std::size_t bits_ = 0;
};

/// a || b || ...
template <typename... Rest>
BitString concat(BitString head, const Rest&... rest) {
  (head.append(rest), ...);
  return head;
}

/// Equal-length XOR; throws LengthError on a length mismatch.
BitString operator^(const BitString& a, const BitString& b);

/// First n bits of s. Throws LengthError if n > s.size().
BitString leftmost(const BitString& s, std::size_t n);

/// Last n bits of s. Throws LengthError if n > s.size().
BitString rightmost(const BitString& s, std::size_t n);

/// (int(a) + int(b)) mod 2^n as an n-bit string. Shorter operands are
/// zero-extended on the left; longer ones are first reduced mod 2^n.
BitString add_mod_pow2(const BitString& a, const BitString& b, std::size_t n);

/// Big-endian fixed-width encoding. Throws OverflowError if value >= 2^width.
BitString int_encode(std::uint64_t value, std::size_t width);

/// Inverse of int_encode. Throws OverflowError if the value needs more than
/// 64 bits.
std::uint64_t int_decode(const BitString& s);

}  // namespace ascon_drbg
