#include <gtest/gtest.h>

#include "fz/criterion.hpp"
#include "fz/reduction.hpp"
#include "fz/text.hpp"
#include "gen.hpp"

namespace fz {
namespace {

using testing::Gen;

ModuleVector basis(int n, int l, const BiPoly& c) {
  ModuleVector m = ModuleVector::zero(n, c.field());
  m.coords[static_cast<std::size_t>(l)] = c;
  return m;
}

ModuleVector random_vector(Gen& g, const FieldPtr& f, int n, int max_t, int max_theta) {
  ModuleVector m = ModuleVector::zero(n, f);
  for (auto& c : m.coords) c = g.bi(f, max_t, max_theta);
  return m;
}

TEST(EPoint, Layout) {
  // n = 3: (0,2) (0,1) (0,0) (1,1) (1,0) (2,0)
  EXPECT_EQ(EPoint::dimension(3), 6);
  EXPECT_EQ(EPoint::flat_index(3, 0, 2), 0);
  EXPECT_EQ(EPoint::flat_index(3, 0, 0), 2);
  EXPECT_EQ(EPoint::flat_index(3, 1, 1), 3);
  EXPECT_EQ(EPoint::flat_index(3, 2, 0), 5);
  EPoint e(3, Field::prime(3));
  EXPECT_THROW(e.slot(1, 2), std::out_of_range);
  EXPECT_THROW(EPoint(0, Field::prime(3)), std::invalid_argument);
}

class ReductionTest : public ::testing::Test {
 protected:
  FieldPtr f = Field::prime(3);
  ATContext at = anderson_thakur(8, f);
  BiPoly one = parse_bipoly("1", f);
};

TEST_F(ReductionTest, BasisElementIsUnitVector) {
  for (int n = 1; n <= 5; ++n) {
    const EPoint e = reduce_to_epoint(basis(n, n - 1, one), at);
    EPoint expect(n, f);
    expect.slot(n - 1, 0) = parse_theta_poly("1", f);
    EXPECT_EQ(e, expect);
  }
}

TEST_F(ReductionTest, SigmaOfX0CollapsesToX0) {
  for (int n = 1; n <= 5; ++n) {
    const EPoint e = reduce_to_epoint(basis(n, 0, BiPoly::t_minus_theta_pow(f, n)), at);
    EPoint expect(n, f);
    expect.slot(0, 0) = parse_theta_poly("1", f);
    EXPECT_EQ(e, expect);
  }
}

TEST_F(ReductionTest, HandReduction) {
  const EPoint e = reduce_to_epoint(basis(3, 0, BiPoly::t_minus_theta_pow(f, 4)), at);
  EPoint expect(3, f);
  expect.slot(0, 1) = parse_theta_poly("1", f);
  expect.slot(0, 0) = parse_theta_poly("T-T^3", f);
  EXPECT_EQ(e, expect);
}

TEST_F(ReductionTest, ContextMustCoverWeight) {
  const ATContext short_at = anderson_thakur(1, f);
  EXPECT_THROW(reduce_to_epoint(ModuleVector::zero(4, f), short_at), std::invalid_argument);
}

TEST_F(ReductionTest, BudgetGuard) {
  EXPECT_THROW(reduce_to_epoint(basis(2, 0, parse_bipoly("t^40T", f)), at, ReductionBudget{5}), BudgetExceeded);
}

TEST_F(ReductionTest, PreimageRoundTrip) {
  Gen g(61);
  for (int k = 0; k < 50; ++k) {
    const int n = g.uniform(1, 5);
    EPoint u(n, f);
    for (int l = 0; l < n; ++l) {
      for (int j = 0; j < n - l; ++j) u.slot(l, j) = g.uni(f, 4);
    }
    EXPECT_EQ(reduce_to_epoint(to_module_vector(u), at), u);
  }
}

TEST_F(ReductionTest, PhiPrimeTwisted) {
  const BiMatrix m = phi_prime_twisted(3, at);
  const BiPoly step = parse_bipoly("t-T^3", f);
  EXPECT_EQ(m[0][0], pow(step, 3));
  EXPECT_EQ(m[1][1], pow(step, 2));
  EXPECT_EQ(m[2][2], step);
  // The diagonal is the twist of (t - T)^{n-i}.
  for (int i = 0; i < 3; ++i) EXPECT_EQ(m[i][i], frobenius_twist(BiPoly::t_minus_theta_pow(f, 3 - i), 1));
  EXPECT_EQ(m[1][0], pow(step, 3));
  EXPECT_EQ(m[2][0], at.h(1) * pow(step, 3));
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) EXPECT_TRUE(m[i][j].is_zero());
  }
  EXPECT_THROW(phi_prime_twisted(1, at), std::invalid_argument);
}

TEST_F(ReductionTest, ExtRowGroupOperations) {
  Gen g(62);
  auto row = [&] {
    ExtRow r{3, {}};
    for (int i = 0; i < 3; ++i) r.entries.push_back(g.bi(f, 4, 4));
    return r;
  };
  const ExtRow zero{3, std::vector<BiPoly>(3, BiPoly(f))};
  for (int k = 0; k < 20; ++k) {
    const ExtRow r = row();
    EXPECT_EQ(baer_sum(r, zero).entries, r.entries);
    EXPECT_EQ(scalar_action(parse_t_poly("1", f), r).entries, r.entries);
    const UniPoly a = g.uni(f, 4, Var::T), b = g.uni(f, 4, Var::T);
    EXPECT_EQ(scalar_action(a * b, r).entries, scalar_action(a, scalar_action(b, r)).entries);
  }
  EXPECT_THROW(baer_sum(zero, ExtRow{2, std::vector<BiPoly>(2, BiPoly(f))}), std::invalid_argument);
}

class ReductionProperties : public ::testing::TestWithParam<std::uint32_t> {
 protected:
  FieldPtr f = Field::prime(GetParam());
  ATContext at = anderson_thakur(8, f);
};

TEST_P(ReductionProperties, LinearityAndShiftInsensitivity) {
  Gen g(63 + GetParam());
  for (int k = 0; k < 100; ++k) {
    const int n = g.uniform(2, 5);
    ModuleVector u = random_vector(g, f, n, n + 2, 2), v = random_vector(g, f, n, n + 2, 2);
    const EPoint du = reduce_to_epoint(u, at), dv = reduce_to_epoint(v, at);
    EXPECT_EQ(reduce_to_epoint(u + v, at), du + dv);
    for (int shift : {1, 2}) {
      ModuleVector s = u;
      s.sigma_shift = shift;
      EXPECT_EQ(reduce_to_epoint(s, at), du);
    }
  }
}

TEST_P(ReductionProperties, KernelContainsSigmaMinusOne) {
  // Delta(b (t - T)^n x_0) = Delta(b^{(1)} x_0) for deg_t b <= n - 1.
  Gen g(64 + GetParam());
  for (int k = 0; k < 100; ++k) {
    const int n = g.uniform(1, 5);
    const BiPoly b = g.bi(f, n - 1, 3);
    const EPoint lhs = reduce_to_epoint(basis(n, 0, b * BiPoly::t_minus_theta_pow(f, n)), at);
    const EPoint rhs = reduce_to_epoint(basis(n, 0, frobenius_twist(b, 1)), at);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST_P(ReductionProperties, HornerAgreesWithDirectProduct) {
  Gen g(65 + GetParam());
  for (int k = 0; k < 20; ++k) {
    const int n = g.uniform(2, 3);
    const ModuleVector w = random_vector(g, f, n, n, 1);
    const UniPoly a = g.uni(f, 3, Var::T);
    const EPoint v = reduce_to_epoint(w, at);
    EXPECT_EQ(rho_action(a, v, at), rho_direct(a, w, at));
  }
}

TEST_P(ReductionProperties, RhoIsAnAlgebraAction) {
  Gen g(66 + GetParam());
  for (int k = 0; k < 20; ++k) {
    const int n = g.uniform(2, 4);
    const EPoint v = reduce_to_epoint(random_vector(g, f, n, n, 1), at);
    const UniPoly a = g.uni(f, 3, Var::T), b = g.uni(f, 3, Var::T);
    EXPECT_EQ(rho_action(a * b, v, at), rho_action(a, rho_action(b, v, at), at));
    EXPECT_EQ(rho_action(a + b, v, at), rho_action(a, v, at) + rho_action(b, v, at));
  }
}

INSTANTIATE_TEST_SUITE_P(Primes, ReductionProperties, ::testing::Values(2u, 3u, 5u));

TEST(ReductionAudit, NoSlotEverLeftA) {
  auto f = Field::prime(3);
  const ATContext at = anderson_thakur(4, f);
  reduce_to_epoint(ModuleVector::zero(3, f), at);
  const auto stats = epoint_validation_stats();
  EXPECT_GT(stats.checked, 0u);
  EXPECT_EQ(stats.failures, 0u);
}

}  // namespace
}  // namespace fz
