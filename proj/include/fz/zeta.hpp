#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fz/criterion.hpp"
#include "fz/laurent.hpp"

namespace fz {

/// Enumerate monic a with deg a <= max_degree; series are trusted below
/// guarantee and computed internally up to work_cap.
struct PrecisionPlan {
  int max_degree = 0;
  std::int64_t slack = 0;
  std::int64_t guarantee = 0;
  std::int64_t work_cap = 0;
};

/// Plan for evaluating the relation of C. slack is the largest excess of
/// numerator over denominator degree among the coefficients. Throws
/// std::invalid_argument when no positive guarantee is possible.
PrecisionPlan make_plan(int max_degree, const ShuffleTuple& c);
/// Plan for bare zeta values of weight up to max_weight.
PrecisionPlan make_plan(int max_degree, int max_weight);

/// Default cap on the number of monic polynomials enumerated per stratum.
constexpr std::uint64_t kEnumerationBudget = 1'000'000;

/// Exact sum of 1/a^s over monic a of degree d. Throws std::length_error
/// past the enumeration budget.
RationalFunction power_sum(int d, int s, const FieldPtr& f, std::uint64_t budget = kEnumerationBudget);

/// Strata S_d(s) for d <= plan.max_degree, s <= max_weight, all from one
/// enumeration pass over monic polynomials.
class ZetaOracle {
 public:
  ZetaOracle(FieldPtr f, PrecisionPlan plan, int max_weight, std::uint64_t budget = kEnumerationBudget);

  const PrecisionPlan& plan() const noexcept { return plan_; }
  const LaurentSeries& stratum(int d, int s) const;
  /// zeta_A(s), exact below min(s (D+1), work_cap).
  LaurentSeries zeta(int s) const;
  /// zeta_A(s1, s2), exact below min(s1 (D+1), work_cap).
  LaurentSeries double_zeta(int s1, int s2) const;

 private:
  FieldPtr field_;
  PrecisionPlan plan_;
  int max_weight_;
  std::vector<std::vector<LaurentSeries>> strata_;  // [d][s-1]
};

LaurentSeries zeta_value(int s, const PrecisionPlan& plan, const FieldPtr& f);
LaurentSeries double_zeta(int s1, int s2, const PrecisionPlan& plan, const FieldPtr& f);

struct NumericCheck {
  LaurentSeries residual;
  std::int64_t guarantee = 0;
  /// First exponent below the guarantee with a nonzero coefficient.
  std::optional<std::int64_t> nonzero_at;
  bool vanishes() const noexcept { return !nonzero_at; }
};

/// Residual zeta(r)zeta(s) - zeta(r,s) - zeta(s,r) - b0 zeta(n) - sum a_i zeta(i, n-i).
NumericCheck check_sr_numeric(const ShuffleTuple& c, const PrecisionPlan& plan);

}  // namespace fz
