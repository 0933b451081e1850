#include <gtest/gtest.h>

#include "fz/text.hpp"
#include "gen.hpp"

namespace fz {
namespace {

using testing::Gen;

TEST(Text, ParsesGrammar) {
  auto f = Field::prime(3);
  EXPECT_EQ(to_string(parse_theta_poly("T^3+2T", f)), "T^3+2T");
  EXPECT_EQ(to_string(parse_theta_poly("T^3 - T", f)), "T^3+2T");
  EXPECT_EQ(to_string(parse_theta_poly("2(T+1)^2", f)), "2T^2+T+2");
  EXPECT_EQ(to_string(parse_theta_poly("5T*T", f)), "2T^2");
  EXPECT_EQ(to_string(parse_theta_poly("-1", f)), "2");
  EXPECT_EQ(to_string(parse_theta_poly("T/2", f)), "2T");
  EXPECT_EQ(to_string(parse_rational("(T^3+2T+2)/(T^3+2T)", f)), "(T^3+2T+2)/(T^3+2T)");
  EXPECT_EQ(to_string(parse_rational("(2T^3+T+2)/(2T^3+T)", f)), "(T^3+2T+1)/(T^3+2T)");
  EXPECT_EQ(to_string(parse_rational("T/T^2", f)), "1/T");
  EXPECT_EQ(to_string(parse_t_poly("(t^3-t)^2", f)), "t^6+t^4+t^2");
  EXPECT_EQ(to_string(parse_bipoly("(t-T)^3", f)), "t^3+2T^3");
  EXPECT_EQ(to_string(parse_bipoly("tT^3 + T t", f)), "tT^3+tT");
  EXPECT_EQ(to_string(parse_theta_poly("0", f)), "0");
}

TEST(Text, ExtensionFieldCoefficients) {
  auto f = Field::make(2, 2, std::vector<std::uint32_t>{1, 1, 1});
  const UniPoly p = parse_theta_poly("zT^2 + (z+1)T + z^2", f);
  EXPECT_EQ(to_string(p), "zT^2+(z+1)T+z+1");
  EXPECT_EQ(parse_theta_poly(to_string(p), f), p);
  EXPECT_THROW(parse_theta_poly("z", Field::prime(3)), ParseError);
}

TEST(Text, Modulus) {
  EXPECT_EQ(parse_modulus("z^2+z+1", 2), (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(parse_modulus("x^2+1", 3), (std::vector<std::uint32_t>{1, 0, 1}));
}

TEST(Text, Errors) {
  auto f = Field::prime(3);
  EXPECT_THROW(parse_rational("", f), ParseError);
  EXPECT_THROW(parse_rational("T+", f), ParseError);
  EXPECT_THROW(parse_rational("(T+1", f), ParseError);
  EXPECT_THROW(parse_rational("T^-1", f), ParseError);
  EXPECT_THROW(parse_rational("1/(T-T)", f), ParseError);
  EXPECT_THROW(parse_rational("t", f), ParseError);
  EXPECT_THROW(parse_theta_poly("1/T", f), ParseError);
  EXPECT_THROW(parse_rational("1/3", f), ParseError);
  try {
    parse_rational("T+#", f);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(Text, RoundTrip) {
  for (auto f : {Field::prime(3), Field::prime(7), Field::make(3, 2)}) {
    Gen g(41);
    for (int k = 0; k < 200; ++k) {
      const auto r = g.rational(f, 5);
      EXPECT_EQ(parse_rational(to_string(r), f), r) << to_string(r);
      const auto b = g.bi(f, 4, 4);
      EXPECT_EQ(parse_bipoly(to_string(b), f), b) << to_string(b);
      const auto u = g.uni(f, 6, Var::T);
      EXPECT_EQ(parse_t_poly(to_string(u), f), u);
    }
  }
}

}  // namespace
}  // namespace fz
