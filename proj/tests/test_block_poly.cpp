#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>

#include "oracles.hpp"
#include "wordalg/block_poly.hpp"

using namespace wordalg;

TEST(BlockPoly, EncodeExamples) {
  EXPECT_EQ(block_encode(Word::from_string("1101")).coeffs(), (std::vector<int>{2, -1, 1}));
  EXPECT_EQ(block_encode(Word::from_string("0000")).coeffs(), (std::vector<int>{-4}));
  EXPECT_EQ(block_encode(Word::from_string("1")).coeffs(), (std::vector<int>{1}));
  EXPECT_EQ(block_encode(Word::from_string("1101")).to_string(), "+2 -1 +1");
  EXPECT_THROW(block_encode(Word()), std::invalid_argument);
}

TEST(BlockPoly, DecodeExamples) {
  EXPECT_EQ(block_decode(BlockPoly({2, -1, 1}, 4)).str(), "1101");
  EXPECT_EQ(block_decode(BlockPoly({-4}, 4)).str(), "0000");
}

TEST(BlockPoly, Validation) {
  EXPECT_THROW(BlockPoly({}, 0), std::invalid_argument);
  EXPECT_THROW(BlockPoly({2, 0, 1}, 3), std::invalid_argument);
  EXPECT_THROW(BlockPoly({2, 1}, 3), std::invalid_argument);
  EXPECT_THROW(BlockPoly({2, -1}, 4), std::invalid_argument);
}

TEST(BlockPoly, RoundTripAgainstRunOracle) {
  for (int k = 1; k <= 12; ++k)
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v) {
      const Word w(v, k);
      const BlockPoly p = block_encode(w);
      ASSERT_EQ(p.coeffs(), oracle::runs(oracle::bits(v, k)));
      int magnitude = 0;
      for (int c : p.coeffs()) magnitude += std::abs(c);
      ASSERT_EQ(magnitude, k);
      ASSERT_EQ(p.sum(), 2 * oracle::ones(oracle::bits(v, k)) - k);
      ASSERT_EQ(p.coeffs().front() > 0, w.bit(0));
      ASSERT_EQ(block_decode(p), w);
    }
}

TEST(BlockPoly, Width64) {
  const Word w(0xF0F0F0F0F0F0F0F0ULL, 64);
  const BlockPoly p = block_encode(w);
  EXPECT_EQ(p.dimension(), 16);
  EXPECT_EQ(block_decode(p), w);
}

TEST(BlockDimension, Examples) {
  EXPECT_EQ(block_dimension(Word::from_string("1101")), 3);
  EXPECT_EQ(block_dimension(Word::from_string("11111")), 1);
  EXPECT_EQ(block_dimension(Word::from_string("000")), 1);
  EXPECT_EQ(block_dimension(Word::from_string("101010")), 6);
  for (std::uint64_t v = 0; v < 4096; ++v)
    ASSERT_EQ(block_dimension(Word(v, 12)), static_cast<int>(oracle::runs(oracle::bits(v, 12)).size()));
}

TEST(DeltaSequence, BruteForce) {
  EXPECT_EQ(delta_sequence(3), (std::vector<int>{1, 2, 3, 2, 2, 3, 2, 1}));
  EXPECT_EQ(delta_sequence(1), (std::vector<int>{1, 1}));
  for (int k = 1; k <= 16; ++k) {
    const auto d = delta_sequence(k);
    ASSERT_TRUE(std::equal(d.begin(), d.end(), d.rbegin())) << "k=" << k;
  }
  EXPECT_EQ(delta_sequence(12, 1), delta_sequence(12, 4));
}

TEST(DeltaSequence, Recursion) {
  EXPECT_EQ(delta_sequence_recursive(1), (std::vector<int>{1, 1}));
  EXPECT_EQ(delta_sequence_recursive(3), (std::vector<int>{1, 2, 3, 2, 2, 3, 2, 1}));
  EXPECT_EQ(delta_sequence_recursive(4), (std::vector<int>{1, 2, 3, 2, 3, 4, 3, 2, 2, 3, 4, 3, 2, 3, 2, 1}));
  for (int k = 1; k <= 14; ++k) {
    std::vector<int> brute;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v)
      brute.push_back(static_cast<int>(oracle::runs(oracle::bits(v, k)).size()));
    ASSERT_EQ(delta_sequence_recursive(k), brute) << "kmax=" << k;
  }
}

TEST(ConjugateCoeffs, Examples) {
  EXPECT_EQ(conjugate_coeffs(BlockPoly({2, -1, 1}, 4)).coeffs(), (std::vector<int>{-1, 1, -2}));
  EXPECT_EQ(block_decode(conjugate_coeffs(BlockPoly({2, -1, 1}, 4))).str(), "0100");
  // A palindromic list cancels pointwise against its conjugate.
  const BlockPoly sym({1, -2, 1}, 4);
  const auto cs = conjugate_coeffs(sym).coeffs();
  for (std::size_t i = 0; i < cs.size(); ++i) EXPECT_EQ(sym.coeffs()[i] + cs[i], 0);
}

TEST(ConjugateCoeffs, MatchesConjugateWord) {
  for (int k = 1; k <= 10; ++k)
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v) {
      const Word w(v, k);
      const BlockPoly c = block_encode(w);
      const BlockPoly cs = conjugate_coeffs(c);
      ASSERT_EQ(block_encode(conjugate(w)), cs);
      int total = 0;
      for (int x : c.coeffs()) total += x;
      for (int x : cs.coeffs()) total += x;
      ASSERT_EQ(total, 0);
    }
}

TEST(BlockSequence, Indicators) {
  const std::vector<std::uint8_t> a{1, 1, 0};
  EXPECT_EQ(block_encode_sequence(a).coeffs(), (std::vector<int>{2, -1}));
  const std::vector<std::uint8_t> ones(7, 1);
  EXPECT_EQ(block_encode_sequence(ones).coeffs(), (std::vector<int>{7}));
  const std::vector<std::uint8_t> big(100, 3);
  EXPECT_EQ(block_encode_sequence(big).coeffs(), (std::vector<int>{100}));
  // Dyck membership indicator over S_6.
  std::vector<std::uint8_t> ind;
  for (std::uint64_t v = 0; v < 64; ++v) ind.push_back(oracle::dyck(oracle::bits(v, 6)));
  const BlockPoly p = block_encode_sequence(ind);
  EXPECT_EQ(p.width(), 64);
  EXPECT_EQ(p.coeffs(), (std::vector<int>{-42, 1, -1, 1, -5, 1, -1, 1, -3, 1, -7}));
}
