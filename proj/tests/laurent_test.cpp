#include <gtest/gtest.h>

#include "fz/laurent.hpp"
#include "fz/text.hpp"
#include "gen.hpp"

namespace fz {
namespace {

using testing::Gen;

TEST(Laurent, InverseOfThetaCubeMinusTheta) {
  // 1/(T^3+2T) = u^3 / (1 + 2u^2) with u = 1/T: ones at u^3, u^5, u^7, ...
  auto f = Field::prime(3);
  const auto x = LaurentSeries::from_poly(parse_theta_poly("T^3+2T", f));
  const auto inv = x.inv(15);
  EXPECT_EQ(inv.exact_order(), 15);
  ASSERT_EQ(inv.first_nonzero(), 3);
  for (int e = 0; e < 15; ++e) EXPECT_EQ(inv.coefficient(e), (e >= 3 && e % 2 == 1) ? 1u : 0u) << e;
  EXPECT_THROW(inv.coefficient(15), std::out_of_range);

  const auto back = x * inv;
  EXPECT_EQ(back.exact_order(), 12);
  EXPECT_EQ(back.coefficient(0), 1u);
  for (int e = 1; e < 12; ++e) EXPECT_EQ(back.coefficient(e), 0u);
}

TEST(Laurent, FromRational) {
  auto f = Field::prime(3);
  const auto s = LaurentSeries::from_rational(parse_rational("(T^3+2T+2)/(T^3+2T)", f), 10);
  EXPECT_EQ(s.exact_order(), 10);
  EXPECT_EQ(s.coefficient(0), 1u);
  EXPECT_EQ(s.coefficient(1), 0u);
  EXPECT_EQ(s.coefficient(3), 2u);  // 2/(T^3+2T) starts at 2 u^3
  const auto p = LaurentSeries::from_rational(parse_rational("2T^2", f), 5);
  EXPECT_EQ(p.first_nonzero(), -2);
}

TEST(Laurent, Cancellation) {
  auto f = Field::prime(5);
  const auto x = LaurentSeries(f, -1, {1, 2, 3, 4}, 7);
  const auto z = x - x;
  EXPECT_TRUE(z.is_zero_to_order());
  EXPECT_EQ(z.exact_order(), 7);
  EXPECT_FALSE(z.first_nonzero());
  EXPECT_THROW(z.inv(10), std::domain_error);
}

TEST(Laurent, ExactnessTracking) {
  auto f = Field::prime(3);
  const auto a = LaurentSeries(f, 2, {1, 1}, 9);  // valuation 2, good below 9
  const auto b = LaurentSeries(f, -1, {2}, 4);    // valuation -1, good below 4
  // min(2 + 4, -1 + 9) = 6
  EXPECT_EQ((a * b).exact_order(), 6);
  EXPECT_EQ((a + b).exact_order(), 4);
  // 1/a: relative precision 9 - 2 = 7 from valuation -2, so below 5.
  EXPECT_EQ(a.inv(100).exact_order(), 5);
  EXPECT_EQ(a.pow(2).exact_order(), 11);
  EXPECT_TRUE(LaurentSeries::one(f).is_exact());
}

TEST(Laurent, RingAxiomsUpToOrder) {
  Gen g(31);
  auto f = Field::prime(3);
  auto random = [&] {
    std::vector<Elem> c(static_cast<std::size_t>(g.uniform(1, 6)));
    for (auto& x : c) x = g.elem(f);
    c[0] = g.nonzero(f);
    const int v = g.uniform(-3, 3);
    return LaurentSeries(f, v, std::move(c), v + g.uniform(6, 12));
  };
  auto agree = [](const LaurentSeries& x, const LaurentSeries& y) {
    const auto n = std::min(x.exact_order(), y.exact_order());
    for (std::int64_t e = -10; e < n; ++e) {
      if (x.coefficient(e) != y.coefficient(e)) return false;
    }
    return true;
  };
  for (int k = 0; k < 100; ++k) {
    const auto a = random(), b = random(), c = random();
    EXPECT_TRUE(agree(a * (b + c), a * b + a * c));
    EXPECT_TRUE(agree((a * b) * c, a * (b * c)));
    const auto prod = a * a.inv(40);
    EXPECT_TRUE(agree(prod, LaurentSeries::one(f)));
    // Never claims more than either operand supports.
    const auto va = *a.first_nonzero(), vb = *b.first_nonzero();
    EXPECT_LE((a * b).exact_order(), std::min(va + b.exact_order(), vb + a.exact_order()));
  }
}

}  // namespace
}  // namespace fz
