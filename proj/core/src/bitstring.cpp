#include "ascon_drbg/bitstring.hpp"

#include <algorithm>
#include <cctype>
#include <bit>

#include "ascon_drbg/errors.hpp"

namespace ascon_drbg {

namespace {

constexpr std::size_t byte_count(std::size_t bits) { return (bits + 7) / 8; }

// Clears the pad bits below the last valid bit.
void mask_tail(Bytes& bytes, std::size_t bits) {
  const std::size_t rem = bits % 8;
  if (rem != 0 && !bytes.empty()) {
    bytes.back() &= static_cast<std::uint8_t>(0xFF << (8 - rem));
  }
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

// Value of s reduced mod 2^width, as ceil(width/8) big-endian bytes with the
// least significant bit in bit 0 of the last byte.
Bytes to_right_aligned(const BitString& s, std::size_t width) {
  const BitString t = s.size() > width ? rightmost(s, width) : s;
  const auto src = t.storage();
  const std::size_t shift = (8 - t.size() % 8) % 8;

  Bytes value(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (shift == 0) {
      value[i] = src[i];
    } else {
      const unsigned hi = i > 0 ? static_cast<unsigned>(src[i - 1]) << (8 - shift) : 0u;
      value[i] = static_cast<std::uint8_t>((src[i] >> shift) | hi);
    }
  }

  Bytes out(byte_count(width), 0);
  std::copy(value.begin(), value.end(), out.end() - static_cast<std::ptrdiff_t>(value.size()));
  return out;
}

BitString from_right_aligned(Bytes value, std::size_t width) {
  const std::size_t rem = width % 8;
  if (rem != 0 && !value.empty()) {
    value.front() &= static_cast<std::uint8_t>((1u << rem) - 1);
  }
  const std::size_t shift = (8 - rem) % 8;
  if (shift != 0) {
    for (std::size_t i = 0; i < value.size(); ++i) {
      const unsigned lo = i + 1 < value.size() ? value[i + 1] >> (8 - shift) : 0u;
      value[i] = static_cast<std::uint8_t>((static_cast<unsigned>(value[i]) << shift) | lo);
    }
  }
  return BitString::from_bytes(value, width);
}

}  // namespace

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0x0F]);
  }
  return out;
}

Bytes from_hex(std::string_view hex) {
  while (!hex.empty() && std::isspace(static_cast<unsigned char>(hex.front()))) hex.remove_prefix(1);
  while (!hex.empty() && std::isspace(static_cast<unsigned char>(hex.back()))) hex.remove_suffix(1);
  if (hex.size() % 2 != 0) {
    throw FormatError("hex string has odd length " + std::to_string(hex.size()));
  }
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int hi = hex_value(hex[2 * i]);
    const int lo = hex_value(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) {
      throw FormatError("invalid hex digit near offset " + std::to_string(2 * i));
    }
    out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return out;
}

BitString BitString::zeros(std::size_t bits) {
  BitString s;
  s.bytes_.assign(byte_count(bits), 0);
  s.bits_ = bits;
  return s;
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes) {
  BitString s;
  s.bytes_.assign(bytes.begin(), bytes.end());
  s.bits_ = bytes.size() * 8;
  return s;
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes, std::size_t bits) {
  if (bits > bytes.size() * 8) {
    throw LengthError("requested " + std::to_string(bits) + " bits from " +
                      std::to_string(bytes.size()) + " bytes");
  }
  BitString s;
  s.bytes_.assign(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>(byte_count(bits)));
  s.bits_ = bits;
  mask_tail(s.bytes_, bits);
  return s;
}

BitString BitString::from_hex(std::string_view hex) { return from_bytes(ascon_drbg::from_hex(hex)); }

BitString BitString::from_binary(std::string_view binary) {
  BitString s = zeros(binary.size());
  for (std::size_t i = 0; i < binary.size(); ++i) {
    if (binary[i] == '1') {
      s.bytes_[i / 8] |= static_cast<std::uint8_t>(0x80 >> (i % 8));
    } else if (binary[i] != '0') {
      throw FormatError("binary literal may contain only '0' and '1'");
    }
  }
  return s;
}

bool BitString::bit(std::size_t index) const {
  if (index >= bits_) {
    throw LengthError("bit index " + std::to_string(index) + " out of range");
  }
  return (bytes_[index / 8] >> (7 - index % 8)) & 1;
}

std::span<const std::uint8_t> BitString::bytes() const {
  if (!byte_aligned()) {
    throw LengthError("bit string of " + std::to_string(bits_) + " bits is not whole bytes");
  }
  return bytes_;
}

Bytes BitString::to_bytes() const {
  const auto b = bytes();
  return Bytes(b.begin(), b.end());
}

std::string BitString::to_hex() const { return ascon_drbg::to_hex(bytes()); }

std::string BitString::to_binary() const {
  std::string out;
  out.reserve(bits_);
  for (std::size_t i = 0; i < bits_; ++i) out.push_back(bit(i) ? '1' : '0');
  return out;
}

void BitString::append_bits(std::span<const std::uint8_t> src, std::size_t bits) {
  if (bits == 0) return;
  const std::size_t offset = bits_ % 8;
  const std::size_t src_bytes = byte_count(bits);
  if (offset == 0) {
    bytes_.insert(bytes_.end(), src.begin(), src.begin() + static_cast<std::ptrdiff_t>(src_bytes));
  } else {
    for (std::size_t i = 0; i < src_bytes; ++i) {
      bytes_.back() |= static_cast<std::uint8_t>(src[i] >> offset);
      bytes_.push_back(static_cast<std::uint8_t>(src[i] << (8 - offset)));
    }
  }
  bits_ += bits;
  bytes_.resize(byte_count(bits_));
  mask_tail(bytes_, bits_);
}

BitString& BitString::append(const BitString& tail) {
  append_bits(tail.bytes_, tail.bits_);
  return *this;
}

BitString& BitString::append_byte(std::uint8_t byte) {
  append_bits(std::span<const std::uint8_t>(&byte, 1), 8);
  return *this;
}

std::size_t BitString::popcount() const noexcept {
  std::size_t n = 0;
  for (std::uint8_t b : bytes_) n += static_cast<std::size_t>(std::popcount(b));
  return n;
}

BitString operator^(const BitString& a, const BitString& b) {
  if (a.size() != b.size()) {
    throw LengthError("xor of " + std::to_string(a.size()) + " and " + std::to_string(b.size()) +
                      " bit strings");
  }
  Bytes out(a.storage().begin(), a.storage().end());
  const auto rhs = b.storage();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] ^= rhs[i];
  return BitString::from_bytes(out, a.size());
}

BitString leftmost(const BitString& s, std::size_t n) {
  if (n > s.size()) {
    throw LengthError("leftmost(" + std::to_string(n) + ") of a " + std::to_string(s.size()) +
                      "-bit string");
  }
  return BitString::from_bytes(s.storage(), n);
}

BitString rightmost(const BitString& s, std::size_t n) {
  if (n > s.size()) {
    throw LengthError("rightmost(" + std::to_string(n) + ") of a " + std::to_string(s.size()) +
                      "-bit string");
  }
  const std::size_t start = s.size() - n;
  const auto src = s.storage().subspan(start / 8);
  const std::size_t shift = start % 8;
  if (shift == 0) return BitString::from_bytes(src, n);

  Bytes out(byte_count(n));
  for (std::size_t j = 0; j < out.size(); ++j) {
    const unsigned lo = j + 1 < src.size() ? src[j + 1] >> (8 - shift) : 0u;
    out[j] = static_cast<std::uint8_t>((static_cast<unsigned>(src[j]) << shift) | lo);
  }
  return BitString::from_bytes(out, n);
}

BitString add_mod_pow2(const BitString& a, const BitString& b, std::size_t n) {
  Bytes x = to_right_aligned(a, n);
  const Bytes y = to_right_aligned(b, n);
  unsigned carry = 0;
  for (std::size_t i = x.size(); i-- > 0;) {
    const unsigned sum = static_cast<unsigned>(x[i]) + y[i] + carry;
    x[i] = static_cast<std::uint8_t>(sum);
    carry = sum >> 8;
  }
  return from_right_aligned(std::move(x), n);
}

BitString int_encode(std::uint64_t value, std::size_t width) {
  if (width < 64 && (value >> width) != 0) {
    throw OverflowError(std::to_string(value) + " does not fit in " + std::to_string(width) + " bits");
  }
  Bytes out(byte_count(width), 0);
  for (std::size_t i = out.size(); i-- > 0 && value != 0;) {
    out[i] = static_cast<std::uint8_t>(value);
    value >>= 8;
  }
  return from_right_aligned(std::move(out), width);
}

std::uint64_t int_decode(const BitString& s) {
  const Bytes v = to_right_aligned(s, s.size());
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i + 8 < v.size()) {
      if (v[i] != 0) throw OverflowError("bit string value exceeds 64 bits");
      continue;
    }
    out = (out << 8) | v[i];
  }
  return out;
}

}  // namespace ascon_drbg
