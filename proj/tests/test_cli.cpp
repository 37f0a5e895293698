#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "wordalg/cli.hpp"

using namespace wordalg;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, DyckEnumJson) {
  const Result r = run({"dyck", "enum", "4", "--format", "json"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["count"], 2);
  EXPECT_EQ(j["catalan"], 2);
  EXPECT_EQ(j["match"], true);
  EXPECT_EQ(r.out.rfind(R"({"n":2,"count":2,"catalan":2,"match":true,)", 0), 0U);
}

TEST(Cli, DeltaRecursiveCheck) {
  const Result r = run({"delta", "3", "--recursive", "--check"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "[1,2,3,2,2,3,2,1]\n");
}

TEST(Cli, TlProduct) {
  const Result r = run({"tl", "product", "4", "1010", "1010"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "1010 delta_exp=1");
  const Result d = run({"tl", "product", "4", "10", "10"});  // decimal input
  EXPECT_EQ(d.out.substr(0, d.out.find('\n')), "1010 delta_exp=1");
  EXPECT_EQ(run({"tl", "product", "4", "0110", "1010"}).code, cli::kExitUsage);
}

TEST(Cli, TableIsDeterministic) {
  const Result a = run({"tl", "table", "8"});
  const Result b = run({"tl", "table", "8", "--jobs", "3"});
  ASSERT_EQ(a.code, cli::kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("P1\n128 128\n", 0), 0U);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"conj", "3", "9"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"norm", "4", "--kind", "fft"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"manchester", "decode", "0011"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST(Cli, WritesToFile) {
  const std::string path = testing::TempDir() + "wordalg_cli_dict.csv";
  const Result r = run({"dict", "2", "--out", path});
  ASSERT_EQ(r.code, cli::kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), "value,string,conjugate,is_palindrome\n0,00,11,true\n1,01,01,false\n2,10,10,false\n3,11,00,true\n");
  std::remove(path.c_str());
}

TEST(Cli, Subcommands) {
  EXPECT_EQ(run({"manchester", "encode", "10"}).out, "0110\n");
  EXPECT_EQ(run({"manchester", "decode", "0110"}).out, "10\n");
  EXPECT_EQ(run({"blockpoly", "4", "13"}).out, "value,string,delta,coeffs\n13,1101,3,+2 -1 +1\n");
  EXPECT_EQ(run({"tl", "relations", "4"}).code, cli::kExitOk);
  EXPECT_EQ(run({"dyck", "closure", "8"}).code, cli::kExitOk);
  EXPECT_EQ(run({"tl", "verify", "4"}).code, cli::kExitOk);
  EXPECT_EQ(run({"lct", "selftest", "--N", "128"}).code, cli::kExitOk);

  const auto census = nlohmann::json::parse(run({"census", "11", "--kind", "digitsum", "--format", "json"}).out);
  EXPECT_EQ(census["distinct_count"], 12);
  EXPECT_EQ(census["largest_class"], 462);

  const auto ofdm = nlohmann::json::parse(run({"ofdm", "4", "1101"}).out);
  EXPECT_EQ(ofdm["sign_term"], 1);
  EXPECT_EQ(ofdm["weights"].size(), 3U);
}

TEST(Cli, SeededSweepsRepeat) {
  const Result a = run({"tl", "verify", "7", "--samples", "500", "--seed", "42"});
  const Result b = run({"tl", "verify", "7", "--samples", "500", "--seed", "42"});
  EXPECT_EQ(a.code, cli::kExitOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ParseWord) {
  EXPECT_EQ(cli::parse_word("0b101", 3), Word(5, 3));
  EXPECT_EQ(cli::parse_word("101", 3), Word(5, 3));
  EXPECT_EQ(cli::parse_word("5", 3), Word(5, 3));
  EXPECT_EQ(cli::parse_word("10", 4), Word(10, 4));
  EXPECT_EQ(cli::parse_word("0010", 4), Word(2, 4));
  EXPECT_THROW(cli::parse_word("9", 3), std::invalid_argument);
  EXPECT_THROW(cli::parse_word("abc", 3), std::invalid_argument);
  EXPECT_THROW(cli::parse_word("0b1111", 3), std::invalid_argument);
}
