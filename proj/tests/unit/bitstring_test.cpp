#include "ascon_drbg/bitstring.hpp"

#include <gtest/gtest.h>

#include "ascon_drbg/errors.hpp"
#include "test_util.hpp"

using namespace ascon_drbg;
using testutil::bin;
using testutil::hexbits;

TEST(Hex, RoundTripsAndNormalizesCase) {
  EXPECT_EQ(to_hex(from_hex("00Ff10aB")), "00ff10ab");
  EXPECT_TRUE(from_hex("").empty());
  EXPECT_EQ(from_hex("  0a0b \n"), (Bytes{0x0a, 0x0b}));
}

TEST(Hex, RejectsMalformedInput) {
  EXPECT_THROW(from_hex("abc"), FormatError);
  EXPECT_THROW(from_hex("zz"), FormatError);
  EXPECT_THROW(from_hex("0x00"), FormatError);
}

TEST(BitString, LengthsNeedNotBeWholeBytes) {
  const BitString s = bin("10110");
  EXPECT_EQ(s.size(), 5u);
  EXPECT_FALSE(s.byte_aligned());
  EXPECT_EQ(s.to_binary(), "10110");
  ASSERT_EQ(s.storage().size(), 1u);
  EXPECT_EQ(s.storage()[0], 0b10110000);
  EXPECT_THROW(s.bytes(), LengthError);
  EXPECT_THROW(s.to_hex(), LengthError);
}

TEST(BitString, FromBytesWithBitCountClearsTail) {
  const Bytes raw = {0xff, 0xff};
  const BitString s = BitString::from_bytes(raw, 11);
  EXPECT_EQ(s.to_binary(), "11111111111");
  EXPECT_EQ(s.storage()[1], 0xe0);
  EXPECT_THROW(BitString::from_bytes(raw, 17), LengthError);
}

TEST(BitString, BitIndexingIsMsbFirst) {
  const BitString s = hexbits("80");
  EXPECT_TRUE(s.bit(0));
  EXPECT_FALSE(s.bit(7));
  EXPECT_THROW(s.bit(8), LengthError);
}

TEST(BitString, RejectsNonBinaryCharacters) { EXPECT_THROW(BitString::from_binary("102"), FormatError); }

TEST(BitString, EqualityIncludesLength) {
  EXPECT_NE(bin("0"), bin("00"));
  EXPECT_NE(BitString{}, bin("0"));
  EXPECT_EQ(BitString::zeros(12), bin("000000000000"));
}

TEST(Leftmost, Examples) {
  EXPECT_EQ(leftmost(bin("10110011"), 4), bin("1011"));
  const BitString s = bin("1011001110");
  EXPECT_EQ(leftmost(s, s.size()), s);
  EXPECT_EQ(leftmost(s, 0), BitString{});
  EXPECT_THROW(leftmost(s, 11), LengthError);
}

TEST(Rightmost, Examples) {
  EXPECT_EQ(rightmost(bin("10110011"), 4), bin("0011"));
  const BitString s = bin("1011001110");
  EXPECT_EQ(rightmost(s, s.size()), s);
  EXPECT_EQ(rightmost(s, 0), BitString{});
  EXPECT_EQ(rightmost(s, 7), bin("1001110"));
  EXPECT_THROW(rightmost(s, 11), LengthError);
}

TEST(Rightmost, SplitLawAtEveryPosition) {
  const BitString s = bin("1101000111010110101");
  for (std::size_t k = 0; k <= s.size(); ++k) {
    EXPECT_EQ(concat(leftmost(s, k), rightmost(s, s.size() - k)), s) << "k=" << k;
  }
}

TEST(Concat, UnalignedPieces) {
  EXPECT_EQ(concat(bin("101"), bin("11"), bin("0001")), bin("101110001"));
  EXPECT_EQ(concat(BitString{}, bin("1")), bin("1"));
  BitString s = bin("1");
  s.append_byte(0xff);
  EXPECT_EQ(s, bin("111111111"));
}

TEST(Xor, EqualLengthsOnly) {
  EXPECT_EQ(bin("1100") ^ bin("1010"), bin("0110"));
  EXPECT_THROW(bin("1") ^ bin("10"), LengthError);
}

TEST(AddModPow2, Wraparound) {
  BitString all_ones = BitString::from_bytes(Bytes(55, 0xff));
  EXPECT_EQ(add_mod_pow2(all_ones, bin("1"), 440), BitString::zeros(440));
}

TEST(AddModPow2, IdentityZeroExtends) {
  const BitString x = hexbits("abcd");
  EXPECT_EQ(add_mod_pow2(x, BitString{}, 24), hexbits("00abcd"));
  EXPECT_EQ(add_mod_pow2(x, bin("0"), 16), x);
}

TEST(AddModPow2, SmallIntegers) {
  EXPECT_EQ(add_mod_pow2(hexbits("0f"), hexbits("01"), 8), hexbits("10"));
  EXPECT_EQ(add_mod_pow2(bin("111"), bin("1"), 3), bin("000"));
  EXPECT_EQ(add_mod_pow2(bin("111"), bin("1"), 4), bin("1000"));
  // Longer operands are reduced first.
  EXPECT_EQ(add_mod_pow2(hexbits("ff01"), hexbits("01"), 8), hexbits("02"));
  EXPECT_EQ(add_mod_pow2(hexbits("01"), hexbits("01"), 0), BitString{});
}

TEST(IntEncode, Examples) {
  EXPECT_EQ(int_encode(1, 8), hexbits("01"));
  EXPECT_EQ(int_encode(256, 32), hexbits("00000100"));
  EXPECT_EQ(int_encode(0, 440), BitString::zeros(440));
  EXPECT_EQ(int_encode(5, 3), bin("101"));
  EXPECT_EQ(int_encode(~std::uint64_t{0}, 64), hexbits("ffffffffffffffff"));
}

TEST(IntEncode, OverflowIsAnError) {
  EXPECT_THROW(int_encode(256, 8), OverflowError);
  EXPECT_THROW(int_encode(8, 3), OverflowError);
  EXPECT_THROW(int_encode(1, 0), OverflowError);
  EXPECT_NO_THROW(int_encode(0, 0));
}

TEST(IntDecode, InvertsEncodeAndDetectsOverflow) {
  EXPECT_EQ(int_decode(int_encode(123456789, 100)), 123456789u);
  EXPECT_EQ(int_decode(bin("101")), 5u);
  EXPECT_EQ(int_decode(BitString{}), 0u);
  EXPECT_THROW(int_decode(concat(bin("1"), BitString::zeros(64))), OverflowError);
}

TEST(BitString, PopcountIgnoresPadding) {
  EXPECT_EQ(bin("10111").popcount(), 4u);
  EXPECT_EQ(BitString::from_bytes(Bytes(10, 0xff)).popcount(), 80u);
}
