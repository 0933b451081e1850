#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fz/cli.hpp"
#include "fz/serialize.hpp"
#include "fz/text.hpp"
#include "gen.hpp"

namespace fz {
namespace {

using testing::Gen;

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "fzshuffle");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(ParseTuple, Examples) {
  auto f = Field::prime(3);
  const ShuffleTuple c = parse_tuple("2; T^3+2T; 0", f, 1, 2);
  EXPECT_EQ(c.b0, RationalFunction::from_int(f, 2));
  EXPECT_EQ(c.a[0], parse_rational("T^3+2T", f));
  EXPECT_TRUE(c.a[1].is_zero());
  const ShuffleTuple d = parse_tuple("(T^3+2T+2)/(T^3+2T); 2; 0", f, 1, 2);
  EXPECT_FALSE(d.b0.is_polynomial());
  EXPECT_THROW(parse_tuple("1; 2", f, 1, 2), std::invalid_argument);
  EXPECT_THROW(parse_tuple("1; 1/(T-T); 0", f, 1, 2), ParseError);
  try {
    parse_tuple("1; T+; 0", f, 1, 2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
}

TEST(ParseTuple, RoundTrip) {
  for (auto f : {Field::prime(3), Field::prime(5), Field::make(2, 2)}) {
    Gen g(91);
    for (int k = 0; k < 50; ++k) {
      const int r = g.uniform(1, 3), s = g.uniform(1, 3);
      ShuffleTuple c{r, s, g.rational(f, 3), {}};
      for (int i = 1; i < r + s; ++i) c.a.push_back(g.rational(f, 3));
      EXPECT_EQ(parse_tuple(format_tuple(c), f, r, s), c) << format_tuple(c);
    }
  }
}

TEST(ParseCorpusLine, Shape) {
  auto f = Field::prime(3);
  const ShuffleTuple c = parse_corpus_line("2 3 | 0; 2T^3+T; 0; 2; 0", f);
  EXPECT_EQ(c.r, 2);
  EXPECT_EQ(c.s, 3);
  EXPECT_THROW(parse_corpus_line("2 3 0; 1", f), std::invalid_argument);
  EXPECT_THROW(parse_corpus_line("2 | 1; 0", f), std::invalid_argument);
}

TEST(Cli, CheckShuffleTorsion) {
  const Result r = invoke({"check-shuffle", "--p", "3", "--r", "1", "--s", "2", "--tuple", "2; T^3+2T; 0"});
  EXPECT_EQ(r.code, kExitTorsion);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["schemaVersion"], kSchemaVersion);
  EXPECT_EQ(j["isTorsion"], true);
  EXPECT_EQ(j["verdict"], "SR certified");
  EXPECT_EQ(j["caseTag"], "coprime");
  EXPECT_EQ(j["annihilator"], "t^3+2t");
  EXPECT_EQ(j["filterViolations"], Json::array());
  // Schema: fixed keys, slot lists of {l, j, value}.
  for (const char* k : {"field", "r", "s", "tuple", "isTorsion", "caseTag", "annihilator", "filterViolations",
                        "vC", "rhoA_vC", "verdict"}) {
    EXPECT_TRUE(j.contains(k)) << k;
  }
  ASSERT_EQ(j["vC"].size(), 6u);
  for (const auto& s : j["rhoA_vC"]) {
    EXPECT_TRUE(s["l"].is_number_integer() && s["j"].is_number_integer());
    EXPECT_EQ(s["value"], "0");
  }
}

TEST(Cli, CheckShuffleNotTorsionAndText) {
  Result r = invoke({"check-shuffle", "--p", "3", "--r", "1", "--s", "2", "--tuple", "1; 1; 0"});
  EXPECT_EQ(r.code, kExitNotTorsion);
  EXPECT_EQ(Json::parse(r.out)["verdict"], "not SR");
  r = invoke({"check-shuffle", "--p", "3", "--r", "1", "--s", "2", "--tuple", "1; 1; 0", "--format", "text"});
  EXPECT_EQ(r.code, kExitNotTorsion);
  EXPECT_NE(r.out.find("verdict: not SR"), std::string::npos);
}

TEST(Cli, CrossCheck) {
  Result r = invoke({"check-shuffle", "--p", "3", "--r", "1", "--s", "2", "--tuple", "(T^3+2T+2)/(T^3+2T); 2; 0",
                     "--cross-check", "--max-degree", "6"});
  EXPECT_EQ(r.code, kExitTorsion);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["crossCheck"]["agree"], true);
  EXPECT_EQ(j["crossCheck"]["numericVanishes"], true);
  // Not applicable when (q - 1) | n.
  r = invoke({"check-shuffle", "--p", "3", "--r", "2", "--s", "2", "--tuple", "1; 0; 0; 0", "--cross-check"});
  EXPECT_EQ(Json::parse(r.out)["crossCheck"]["applicable"], false);
  // Too little precision to see the residual of (1, 1, 0), which starts at
  // exponent 3: the oracle cannot refute and the run reports disagreement.
  r = invoke({"check-shuffle", "--p", "3", "--r", "1", "--s", "2", "--tuple", "1; 1; 0", "--cross-check",
              "--max-degree", "2"});
  EXPECT_EQ(r.code, kExitDisagreement);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"check-shuffle", "--p", "4", "--r", "1", "--s", "2", "--tuple", "1;0;0"}).code, kExitUsage);
  EXPECT_EQ(invoke({"check-shuffle", "--p", "3", "--r", "1", "--s", "2", "--tuple", "1;0"}).code, kExitUsage);
  const Result r = invoke({"check-shuffle", "--p", "3", "--r", "1", "--s", "2", "--tuple", "1; T+*; 0"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("position"), std::string::npos);
  EXPECT_EQ(invoke({"check-shuffle", "--p", "3", "--tuple", "1;0;0"}).code, kExitUsage);
  EXPECT_EQ(invoke({"check-shuffle", "--p", "3", "--r", "1", "--s", "2", "--tuple", "T;T;T", "--budget", "2"}).code,
            kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args = {"check-shuffle", "--p", "3", "--r", "2", "--s", "3", "--tuple", "0; 2T^3+T; 0; 2; 0"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(Cli, OtherCommands) {
  EXPECT_EQ(invoke({"chen-tuple", "--p", "3", "--r", "2", "--s", "3"}).out, "1; 0; 0; 2; 0\n");
  EXPECT_EQ(invoke({"annihilator", "--p", "3", "--n", "5"}).out, "t^6+t^4+t^2\n");
  EXPECT_EQ(invoke({"annihilator", "--p", "2", "--m", "2", "--n", "3"}).out, "t^4+t\n");
  const Result at = invoke({"anderson-thakur", "--p", "3", "--upto", "3"});
  EXPECT_EQ(at.out, "H_0 = 1\nH_1 = 1\nH_2 = 1\nH_3 = 2t^3+2t+2T^3\n");
  const Json atj = Json::parse(invoke({"anderson-thakur", "--p", "3", "--upto", "4", "--format", "json"}).out);
  EXPECT_EQ(atj["H"][4], "2t+T^3");
  const Result phi = invoke({"phi", "--p", "3", "--q", "3", "--n", "2"});
  EXPECT_EQ(phi.code, 0);
  EXPECT_EQ(phi.out, "t^2+tT^3+T^6 | 0\nt^2+tT^3+T^6 | t+2T^3\n");
  const Result phic = invoke({"phi", "--p", "3", "--r", "1", "--s", "2", "--tuple", "2; T^3+2T; 0", "--format", "json"});
  EXPECT_EQ(Json::parse(phic.out)["matrix"].size(), 4u);
  EXPECT_EQ(invoke({"phi", "--p", "3", "--q", "9", "--m", "3", "--n", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"phi", "--p", "3", "--q", "6", "--n", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"annihilator", "--p", "2", "--m", "2", "--modulus", "z^2+z+1", "--n", "3"}).code, 0);
}

TEST(Cli, VerifyNumeric) {
  Result r = invoke({"verify-numeric", "--p", "3", "--r", "1", "--s", "2", "--tuple", "2; T^3+2T; 0", "--max-degree", "6"});
  EXPECT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["verdict"], "vanishes-to-guarantee");
  EXPECT_EQ(j["guarantee"], 4);
  EXPECT_TRUE(j["residualValuation"].is_null());
  r = invoke({"verify-numeric", "--p", "3", "--r", "1", "--s", "2", "--tuple", "1; 1; 0", "--max-degree", "6"});
  EXPECT_EQ(r.code, 1);
  j = Json::parse(r.out);
  EXPECT_EQ(j["verdict"], "nonzero-at 3");
  EXPECT_EQ(j["residualValuation"], 3);
}

TEST(Cli, CorpusMode) {
  const std::string path = ::testing::TempDir() + "fz_corpus.txt";
  {
    std::ofstream o(path);
    o << "1 2 | 1; 1; 0\n\n# comment\n2 3 | 0; 2T^3+T; 0; 2; 0\n1 2 | 2; T^3+2T; 0\n";
  }
  Result r = invoke({"check-shuffle", "--p", "3", "--corpus", path, "--cross-check", "--max-degree", "6"});
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::vector<Json> rows;
  for (std::string l; std::getline(lines, l);) rows.push_back(Json::parse(l));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0]["isTorsion"], false);
  EXPECT_EQ(rows[1]["tuple"], "0; 2T^3+T; 0; 2; 0");
  EXPECT_EQ(rows[2]["isTorsion"], true);
  {
    std::ofstream o(path);
    o << "1 2 | 1; 1\n1 2 | 2; T^3+2T; 0\n";
  }
  r = invoke({"check-shuffle", "--p", "3", "--corpus", path});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.out.find("\"error\""), std::string::npos);
  std::remove(path.c_str());
  EXPECT_EQ(invoke({"check-shuffle", "--p", "3", "--corpus", path}).code, kExitUsage);
}

}  // namespace
}  // namespace fz
