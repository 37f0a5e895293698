#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wordalg/dyck.hpp"
#include "wordalg/tl.hpp"

using namespace wordalg;
using namespace wordalg::tl;

namespace {

Word W(const std::string& s) { return Word::from_string(s); }

void expect_matches_oracle(const std::string& v, const std::string& mu) {
  const oracle::Product ref = oracle::stack(v, mu);
  const FastProduct fp = compose_fast(W(v), W(mu));
  ASSERT_EQ(fp.word.str(), ref.word) << v << " * " << mu;
  ASSERT_EQ(fp.delta_exp, ref.loops) << v << " * " << mu;
  const ScaledDiagram d = compose(from_dyck(W(v)), from_dyck(W(mu)));
  ASSERT_EQ(to_dyck(d.diagram).str(), ref.word);
  ASSERT_EQ(d.delta_exp, ref.loops);

  const Word vu = W(v.substr(0, v.size() / 2));
  const Word mud = W(mu.substr(mu.size() / 2));
  ASSERT_EQ(fp.fast_path, ref.word == v.substr(0, v.size() / 2) + mu.substr(mu.size() / 2));
  // v_u only loses ones, mu_d only gains ones, and only inside the masks.
  ASSERT_EQ(fp.mask_up.value() & ~vu.value(), 0U);
  ASSERT_EQ(fp.mask_down.value() & mud.value(), 0U);
  const SplitWord out = SplitWord::split(fp.word);
  ASSERT_EQ(out.up.value(), vu.value() & ~fp.mask_up.value());
  ASSERT_EQ(out.down.value(), mud.value() | fp.mask_down.value());
  if (fp.fast_path) {
    ASSERT_EQ(fp.mask_up.value(), 0U);
    ASSERT_EQ(fp.mask_down.value(), 0U);
  }
}

}  // namespace

TEST(TL, DyckBijectionExamples) {
  const TLDiagram id = from_dyck(W("1100"));
  EXPECT_EQ(id.pairing(), (std::vector<int>{3, 2, 1, 0}));
  EXPECT_EQ(id, TLDiagram::identity(2));
  const TLDiagram e1 = from_dyck(W("1010"));
  EXPECT_EQ(e1.pairing(), (std::vector<int>{1, 0, 3, 2}));
  EXPECT_THROW(from_dyck(W("0110")), std::invalid_argument);
  for (const std::string& s : oracle::dyck_words(10)) {
    EXPECT_EQ(to_dyck(from_dyck(W(s))).str(), s);
    EXPECT_EQ(from_dyck(W(s)).pairing(), oracle::match_brackets(s));
  }
  EXPECT_EQ(oracle::dyck_words(10).size(), 42U);
}

TEST(TL, DiagramValidation) {
  EXPECT_THROW(TLDiagram(2, {1, 0, 3}), std::invalid_argument);
  EXPECT_THROW(TLDiagram(2, {0, 1, 3, 2}), std::invalid_argument);  // fixed points
  EXPECT_THROW(TLDiagram(2, {2, 3, 0, 1}), std::invalid_argument);  // crossing
}

TEST(TL, Generators) {
  EXPECT_EQ(generator(1, 2), from_dyck(W("1010")));
  EXPECT_EQ(to_dyck(generator(1, 3)).str(), "101010");
  EXPECT_EQ(to_dyck(generator(2, 3)).str(), "110100");
  for (int n = 2; n <= 8; ++n)
    for (int i = 1; i < n; ++i) {
      EXPECT_EQ(generator(i, n).pairing(), oracle::generator(i, n));
      EXPECT_EQ(flip(generator(i, n)), generator(i, n));
    }
  EXPECT_THROW(generator(0, 3), std::out_of_range);
  EXPECT_THROW(generator(3, 3), std::out_of_range);
}

TEST(TL, FlipIsConjugate) {
  for (int n = 1; n <= 6; ++n)
    for (const std::string& s : oracle::dyck_words(2 * n)) {
      const TLDiagram d = from_dyck(W(s));
      ASSERT_EQ(to_dyck(flip(d)), conjugate(W(s)));
      ASSERT_EQ(flip(flip(d)), d);
    }
}

TEST(TL, ComposeExamples) {
  const TLDiagram e1 = generator(1, 2);
  EXPECT_EQ(compose(e1, e1), (ScaledDiagram{e1, 1}));
  const TLDiagram f1 = generator(1, 3), f2 = generator(2, 3);
  EXPECT_EQ(compose(f1, compose(f2, f1).diagram), (ScaledDiagram{f1, 0}));
  for (int n = 1; n <= 5; ++n)
    for (const std::string& s : oracle::dyck_words(2 * n)) {
      const TLDiagram x = from_dyck(W(s));
      ASSERT_EQ(compose(TLDiagram::identity(n), x), (ScaledDiagram{x, 0}));
      ASSERT_EQ(compose(x, TLDiagram::identity(n)), (ScaledDiagram{x, 0}));
    }
}

TEST(TL, ComposeIsAssociative) {
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 7; ++n)
    for (int trial = 0; trial < 300; ++trial) {
      const ScaledDiagram a{from_dyck(W(oracle::random_dyck(n, rng))), 0};
      const ScaledDiagram b{from_dyck(W(oracle::random_dyck(n, rng))), 0};
      const ScaledDiagram c{from_dyck(W(oracle::random_dyck(n, rng))), 0};
      ASSERT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    }
}

TEST(TL, RandomDyckOracleIsValid) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 2000; ++trial) ASSERT_TRUE(oracle::dyck(oracle::random_dyck(5, rng)));
}

TEST(TL, HalfExtractors) {
  const Word w = W("110100");
  EXPECT_EQ(low_half(w).str(), "100");
  EXPECT_EQ(high_half(w).str(), "110");
  const SplitWord s = SplitWord::split(w);
  EXPECT_EQ(s.up.str(), "110");
  EXPECT_EQ(s.down.str(), "100");
  EXPECT_EQ(s.join(), w);
}

TEST(TL, InterfaceCode) {
  EXPECT_EQ(interface_code(W("11"), W("00")), (std::vector<std::uint8_t>{0, 0}));
  EXPECT_EQ(interface_code(W("000"), W("111")), (std::vector<std::uint8_t>{3, 3, 3}));
  // conjugate("1111") = "0000" over "1100".
  EXPECT_EQ(interface_code(W("1111"), W("1100")), (std::vector<std::uint8_t>{1, 1, 0, 0}));
  EXPECT_EQ(interface_code(W("1101"), W("1010")), (std::vector<std::uint8_t>{1, 2, 1, 0}));
}

TEST(TL, ClassifyExamples) {
  const SplitWord e1{W("10"), W("10")};
  const SplitWord id{W("11"), W("00")};
  EXPECT_TRUE(classify_g(e1, e1));
  EXPECT_FALSE(classify_g(id, e1));
  EXPECT_TRUE(classify_g(id, id));
}

TEST(TL, FastProductExamples) {
  FastProduct fp = compose_fast(W("1010"), W("1010"));
  EXPECT_EQ(fp.word.str(), "1010");
  EXPECT_EQ(fp.delta_exp, 1);
  EXPECT_TRUE(fp.fast_path);

  fp = compose_fast(W("1100"), W("1010"));
  EXPECT_EQ(fp.word.str(), "1010");
  EXPECT_EQ(fp.delta_exp, 0);
  EXPECT_FALSE(fp.fast_path);
  EXPECT_EQ(fp.mask_up.str(), "01");
  EXPECT_EQ(fp.mask_down.value(), 0U);

  // Long annihilating paths: v_d = 1101 and mu_u = 1010 at n = 4.
  for (const std::string& vu : {"1111", "1110", "1101", "1100", "1011", "1010"})
    for (const std::string& mud : {"0000", "0100", "1000", "0010"}) {
      const std::string v = vu + "1101", mu = "1010" + mud;
      if (oracle::dyck(v) && oracle::dyck(mu)) expect_matches_oracle(v, mu);
    }
  EXPECT_THROW(compose_fast(W("0110"), W("1010")), std::invalid_argument);
  EXPECT_THROW(compose_fast(W("10"), W("1010")), std::invalid_argument);
}

TEST(TL, FastProductMatchesOracleExhaustive) {
  for (int n = 1; n <= 5; ++n) {
    const auto words = oracle::dyck_words(2 * n);
    for (const auto& v : words)
      for (const auto& mu : words) expect_matches_oracle(v, mu);
  }
}

TEST(TL, FastProductMatchesOracleRandom) {
  std::mt19937_64 rng(2024);
  for (int n = 6; n <= 8; ++n)
    for (int trial = 0; trial < 3000; ++trial)
      expect_matches_oracle(oracle::random_dyck(n, rng), oracle::random_dyck(n, rng));
}

TEST(TL, ClassifyDependsOnInterfaceOnly) {
  const auto words = oracle::dyck_words(8);
  for (const auto& v : words)
    for (const auto& mu : words) {
      const bool g = classify_g(SplitWord::split(W(v)), SplitWord::split(W(mu)));
      ASSERT_EQ(g, compose_fast(W(v), W(mu)).fast_path);
    }
}

TEST(TL, Relations) {
  for (int n = 2; n <= 8; ++n) {
    const RelationReport r = check_relations(n);
    EXPECT_TRUE(r.ok()) << "n=" << n;
    EXPECT_GT(r.checks, 0);
  }
  // Same relations through the string oracle.
  for (int n = 2; n <= 6; ++n)
    for (int i = 1; i < n; ++i) {
      const std::string ei = oracle::encode(oracle::generator(i, n));
      EXPECT_EQ(oracle::stack(ei, ei).word, ei);
      EXPECT_EQ(oracle::stack(ei, ei).loops, 1);
      if (i + 1 < n) {
        const std::string ej = oracle::encode(oracle::generator(i + 1, n));
        EXPECT_EQ(oracle::stack(oracle::stack(ei, ej).word, ei).word, ei);
        EXPECT_EQ(oracle::stack(oracle::stack(ej, ei).word, ej).word, ej);
      }
    }
}

TEST(TL, ProductTable) {
  const BoolMatrix t1 = product_table(1);
  ASSERT_EQ(t1.rows, 2U);
  EXPECT_EQ(t1.cells, (std::vector<std::uint8_t>{1, 0, 0, 0}));
  EXPECT_EQ(product_table_index(1)[0].str(), "10");
  EXPECT_EQ(t1.to_pbm(), "P1\n2 2\n1 0\n0 0\n");

  const BoolMatrix t3 = product_table(3);
  const auto index = product_table_index(3);
  ASSERT_EQ(t3.rows, 32U);
  for (std::size_t r = 0; r < index.size(); ++r)
    for (std::size_t c = 0; c < index.size(); ++c) {
      const std::string v = index[r].str(), mu = index[c].str();
      bool expected = false;
      if (oracle::dyck(v) && oracle::dyck(mu))
        expected = oracle::stack(v, mu).word == v.substr(0, 3) + mu.substr(3);
      ASSERT_EQ(t3.at(r, c), expected) << v << " " << mu;
    }
  EXPECT_EQ(product_table(4, 1), product_table(4, 3));
}

TEST(TL, AlternationReport) {
  const AlternationReport r2 = alternation_report(2, 2);
  EXPECT_TRUE(r2.null_transition_square);
  ASSERT_EQ(r2.steps.size(), 1U);
  EXPECT_TRUE(r2.steps[0].invariant);
  EXPECT_EQ(r2.steps[0].code.str(), "1010");
  EXPECT_EQ(r2.steps[0].delta_exp, 1);

  const AlternationReport r3 = alternation_report(3, 2);
  bool found = false;
  for (const AlternationStep& s : r3.steps)
    if (s.first == 1 && s.second == 2) {
      found = true;
      const oracle::Product ref = oracle::stack("101010", "110100");
      EXPECT_EQ(s.code.str(), ref.word);
      EXPECT_EQ(s.invariant, ref.word == std::string("101") + "100");
    }
  EXPECT_TRUE(found);

  const AlternationReport r4 = alternation_report(4);
  EXPECT_TRUE(r4.null_transition_square);
  EXPECT_EQ(r4.steps.size(), 3U * 3U * 5U);
  EXPECT_EQ(r4.even_checked + r4.odd_checked, static_cast<int>(r4.steps.size()));
}
