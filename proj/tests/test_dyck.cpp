#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wordalg/dyck.hpp"

using namespace wordalg;

TEST(Dyck, BracketExamples) {
  EXPECT_TRUE(is_dyck(Word::from_string("1100")));
  EXPECT_TRUE(is_dyck(Word::from_string("1010")));
  EXPECT_FALSE(is_dyck(Word::from_string("0110")));
  EXPECT_TRUE(is_dyck(Word()));
  EXPECT_FALSE(is_dyck(Word(), DyckConvention::OneOpens, DyckKind::Prime));
  EXPECT_TRUE(is_dyck(Word::from_string("0011"), DyckConvention::ZeroOpens));
  EXPECT_TRUE(is_dyck(Word::from_string("1100"), DyckConvention::OneOpens, DyckKind::Prime));
  EXPECT_FALSE(is_dyck(Word::from_string("1010"), DyckConvention::OneOpens, DyckKind::Prime));
}

TEST(Dyck, BlockExamples) {
  EXPECT_TRUE(is_dyck_blocks(Word::from_string("1100")));
  EXPECT_TRUE(is_dyck_blocks(Word::from_string("1010")));
  EXPECT_FALSE(is_dyck_blocks(Word::from_string("1110")));
  EXPECT_FALSE(is_dyck_blocks(Word::from_string("1010"), DyckConvention::OneOpens, DyckKind::Prime));
}

TEST(Dyck, BlockTestMatchesBracketOracle) {
  for (int width = 1; width <= 14; ++width)
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << width); ++v) {
      const Word w(v, width);
      const std::string s = oracle::bits(v, width);
      for (bool prime : {false, true}) {
        const DyckKind kind = prime ? DyckKind::Prime : DyckKind::Any;
        ASSERT_EQ(is_dyck(w, DyckConvention::OneOpens, kind), oracle::dyck(s, '1', prime)) << s;
        ASSERT_EQ(is_dyck_blocks(w, DyckConvention::OneOpens, kind), oracle::dyck(s, '1', prime)) << s;
        ASSERT_EQ(is_dyck_blocks(w, DyckConvention::ZeroOpens, kind), oracle::dyck(s, '0', prime)) << s;
      }
    }
}

TEST(Dyck, Enumeration) {
  ASSERT_EQ(enumerate_dyck(2).size(), 1U);
  EXPECT_EQ(enumerate_dyck(2)[0].str(), "10");
  const auto four = enumerate_dyck(4);
  ASSERT_EQ(four.size(), 2U);
  EXPECT_EQ(four[0].value(), 10U);
  EXPECT_EQ(four[1].value(), 12U);
  EXPECT_THROW(enumerate_dyck(5), std::invalid_argument);
  for (int n = 1; n <= 8; ++n) {
    const auto words = enumerate_dyck(2 * n, DyckConvention::OneOpens, DyckKind::Any, 2);
    const auto ref = oracle::dyck_words(2 * n);
    ASSERT_EQ(words.size(), ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) ASSERT_EQ(words[i].str(), ref[i]);
    EXPECT_EQ(enumerate_dyck(2 * n, DyckConvention::OneOpens, DyckKind::Prime).size(), catalan(n - 1));
    EXPECT_EQ(enumerate_dyck(2 * n, DyckConvention::ZeroOpens).size(), catalan(n));
  }
}

TEST(Catalan, Values) {
  const std::uint64_t expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  for (int n = 0; n <= 10; ++n) {
    EXPECT_EQ(catalan(n), expected[n]);
    EXPECT_EQ(catalan_product_form(n), expected[n]);
  }
  for (int n = 0; n <= 25; ++n) EXPECT_EQ(catalan(n), catalan_product_form(n)) << "n=" << n;
  EXPECT_EQ(catalan(33), 212336130412243110ULL);
  EXPECT_THROW(catalan(34), std::invalid_argument);
  EXPECT_THROW(catalan_product_form(26), std::invalid_argument);
}

TEST(Closure, Examples) {
  const Word v = Word::from_string("10");
  EXPECT_EQ(conjugate(v).str(), "10");
  EXPECT_TRUE(is_dyck(concat_str(v, conjugate(v))));
  const Word u = Word::from_string("1100");
  EXPECT_EQ(conjugate(u).str(), "1100");
  EXPECT_EQ(concat_str(u, conjugate(u)).str(), "11001100");
  EXPECT_TRUE(is_dyck(concat_str(u, conjugate(u))));
}

TEST(Closure, Exhaustive) {
  for (int k = 2; k <= 16; k += 2) {
    const ClosureReport r = conjugation_closure_check(k);
    EXPECT_TRUE(r.ok()) << "k=" << k;
    EXPECT_EQ(r.dyck_count, catalan(k / 2));
  }
  EXPECT_THROW(conjugation_closure_check(3), std::invalid_argument);
}

TEST(Dyck, ClosedUnderConcatenation) {
  for (int a = 2; a <= 8; a += 2)
    for (int b = 2; b <= 8; b += 2)
      for (const Word& x : enumerate_dyck(a))
        for (const Word& y : enumerate_dyck(b)) {
          ASSERT_TRUE(is_dyck(concat_str(x, y)));
          ASSERT_TRUE(x.bit(0) && !x.bit(a - 1));
          ASSERT_TRUE(is_dyck(complement(x), DyckConvention::ZeroOpens));
        }
}
