#include "ascon_drbg/ascon.hpp"

#include <bit>

namespace ascon_drbg {

namespace {

constexpr std::uint64_t kHashIv = 0x0000080100cc0002ULL;
constexpr std::uint64_t kAeadIv = 0x00001000808c0001ULL;

constexpr std::array<std::uint64_t, 12> kRoundConstants = {
    0xf0, 0xe1, 0xd2, 0xc3, 0xb4, 0xa5, 0x96, 0x87, 0x78, 0x69, 0x5a, 0x4b};

std::uint64_t load_le(const std::uint8_t* p, std::size_t n) noexcept {
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < n; ++i) w |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  return w;
}

void store_le(std::uint64_t w, std::uint8_t* p, std::size_t n) noexcept {
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint8_t>(w >> (8 * i));
}

inline void round(std::uint64_t (&s)[5], std::uint64_t c) noexcept {
  s[2] ^= c;

  s[0] ^= s[4];
  s[4] ^= s[3];
  s[2] ^= s[1];
  const std::uint64_t t0 = ~s[0] & s[1];
  const std::uint64_t t1 = ~s[1] & s[2];
  const std::uint64_t t2 = ~s[2] & s[3];
  const std::uint64_t t3 = ~s[3] & s[4];
  const std::uint64_t t4 = ~s[4] & s[0];
  s[0] ^= t1;
  s[1] ^= t2;
  s[2] ^= t3;
  s[3] ^= t4;
  s[4] ^= t0;
  s[1] ^= s[0];
  s[0] ^= s[4];
  s[3] ^= s[2];
  s[2] = ~s[2];

  s[0] ^= std::rotr(s[0], 19) ^ std::rotr(s[0], 28);
  s[1] ^= std::rotr(s[1], 61) ^ std::rotr(s[1], 39);
  s[2] ^= std::rotr(s[2], 1) ^ std::rotr(s[2], 6);
  s[3] ^= std::rotr(s[3], 10) ^ std::rotr(s[3], 17);
  s[4] ^= std::rotr(s[4], 7) ^ std::rotr(s[4], 41);
}

void permute_unchecked(AsconState& state, int rounds) noexcept {
  std::uint64_t s[5] = {state.x[0], state.x[1], state.x[2], state.x[3], state.x[4]};
  for (std::size_t i = kRoundConstants.size() - static_cast<std::size_t>(rounds);
       i < kRoundConstants.size(); ++i) {
    round(s, kRoundConstants[i]);
  }
  for (std::size_t i = 0; i < 5; ++i) state.x[i] = s[i];
}

}  // namespace

std::array<std::uint8_t, AsconState::kBytes> AsconState::serialize() const noexcept {
  std::array<std::uint8_t, kBytes> out{};
  for (std::size_t i = 0; i < 5; ++i) store_le(x[i], out.data() + 8 * i, 8);
  return out;
}

AsconState AsconState::deserialize(std::span<const std::uint8_t> bytes) {
  if (bytes.size() != kBytes) {
    throw ParameterError("Ascon state needs 40 bytes, got " + std::to_string(bytes.size()));
  }
  AsconState s;
  for (std::size_t i = 0; i < 5; ++i) s.x[i] = load_le(bytes.data() + 8 * i, 8);
  return s;
}

void ascon_permute_inplace(AsconState& state, int rounds) {
  if (rounds != 8 && rounds != 12) {
    throw ParameterError("unsupported Ascon round count " + std::to_string(rounds));
  }
  permute_unchecked(state, rounds);
}

AsconState ascon_permute(AsconState state, int rounds) {
  ascon_permute_inplace(state, rounds);
  return state;
}

AsconHash256::AsconHash256() noexcept {
  state_.x = {kHashIv, 0, 0, 0, 0};
  permute_unchecked(state_, 12);
}

AsconHash256& AsconHash256::update(std::span<const std::uint8_t> data) noexcept {
  std::size_t i = 0;
  if (buffered_ != 0) {
    while (buffered_ < 8 && i < data.size()) buffer_[buffered_++] = data[i++];
    if (buffered_ < 8) return *this;
    state_.x[0] ^= load_le(buffer_.data(), 8);
    permute_unchecked(state_, 12);
    buffered_ = 0;
  }
  for (; i + 8 <= data.size(); i += 8) {
    state_.x[0] ^= load_le(data.data() + i, 8);
    permute_unchecked(state_, 12);
  }
  while (i < data.size()) buffer_[buffered_++] = data[i++];
  return *this;
}

Digest256 AsconHash256::finalize() noexcept {
  state_.x[0] ^= load_le(buffer_.data(), buffered_);
  state_.x[0] ^= 0x01ULL << (8 * buffered_);
  permute_unchecked(state_, 12);

  Digest256 out{};
  for (std::size_t i = 0; i < 4; ++i) {
    store_le(state_.x[0], out.data() + 8 * i, 8);
    if (i < 3) permute_unchecked(state_, 12);
  }
  return out;
}

Digest256 ascon_hash256(std::span<const std::uint8_t> message) {
  return AsconHash256().update(message).finalize();
}

AeadCiphertext aead128_encrypt(const AeadKey& key, const AeadNonce& nonce,
                               std::span<const std::uint8_t> associated_data,
                               std::span<const std::uint8_t> plaintext) {
  const std::uint64_t k0 = load_le(key.bytes().data(), 8);
  const std::uint64_t k1 = load_le(key.bytes().data() + 8, 8);

  AsconState s;
  s.x = {kAeadIv, k0, k1, load_le(nonce.bytes().data(), 8), load_le(nonce.bytes().data() + 8, 8)};
  permute_unchecked(s, 12);
  s.x[3] ^= k0;
  s.x[4] ^= k1;

  if (!associated_data.empty()) {
    std::size_t i = 0;
    for (; i + 16 <= associated_data.size(); i += 16) {
      s.x[0] ^= load_le(associated_data.data() + i, 8);
      s.x[1] ^= load_le(associated_data.data() + i + 8, 8);
      permute_unchecked(s, 8);
    }
    std::array<std::uint8_t, 16> last{};
    const std::size_t rem = associated_data.size() - i;
    std::copy(associated_data.begin() + static_cast<std::ptrdiff_t>(i), associated_data.end(),
              last.begin());
    last[rem] = 0x01;
    s.x[0] ^= load_le(last.data(), 8);
    s.x[1] ^= load_le(last.data() + 8, 8);
    permute_unchecked(s, 8);
  }
  s.x[4] ^= 1ULL << 63;

  AeadCiphertext out;
  out.ciphertext.resize(plaintext.size());
  std::size_t i = 0;
  for (; i + 16 <= plaintext.size(); i += 16) {
    s.x[0] ^= load_le(plaintext.data() + i, 8);
    s.x[1] ^= load_le(plaintext.data() + i + 8, 8);
    store_le(s.x[0], out.ciphertext.data() + i, 8);
    store_le(s.x[1], out.ciphertext.data() + i + 8, 8);
    permute_unchecked(s, 8);
  }
  std::array<std::uint8_t, 16> last{};
  const std::size_t rem = plaintext.size() - i;
  std::copy(plaintext.begin() + static_cast<std::ptrdiff_t>(i), plaintext.end(), last.begin());
  last[rem] = 0x01;
  s.x[0] ^= load_le(last.data(), 8);
  s.x[1] ^= load_le(last.data() + 8, 8);
  std::array<std::uint8_t, 16> keystream{};
  store_le(s.x[0], keystream.data(), 8);
  store_le(s.x[1], keystream.data() + 8, 8);
  std::copy_n(keystream.begin(), rem, out.ciphertext.begin() + static_cast<std::ptrdiff_t>(i));

  s.x[2] ^= k0;
  s.x[3] ^= k1;
  permute_unchecked(s, 12);
  s.x[3] ^= k0;
  s.x[4] ^= k1;
  std::array<std::uint8_t, 16> tag{};
  store_le(s.x[3], tag.data(), 8);
  store_le(s.x[4], tag.data() + 8, 8);
  out.tag = AeadTag(tag);
  return out;
}

}  // namespace ascon_drbg
