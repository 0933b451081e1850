#include "fz/zeta.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fz {

namespace {

std::uint64_t count_monic(const FieldPtr& f, int d, std::uint64_t budget) {
  std::uint64_t c = 1;
  for (int i = 0; i < d; ++i) {
    c *= f->q();
    if (c > budget) {
      throw std::length_error("enumeration of degree-" + std::to_string(d) + " monic polynomials exceeds budget");
    }
  }
  return c;
}

// The idx-th monic polynomial of degree d: low coefficients are the base-q
// digits of idx.
UniPoly monic_at(const FieldPtr& f, int d, std::uint64_t idx) {
  std::vector<Elem> c(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 0; i < d; ++i, idx /= f->q()) c[static_cast<std::size_t>(i)] = static_cast<Elem>(idx % f->q());
  c.back() = 1;
  return UniPoly(f, Var::Theta, std::move(c));
}

std::int64_t excess(const RationalFunction& x) {
  if (x.is_zero()) return 0;
  return x.num().degree() - x.den().degree();
}

}  // namespace

PrecisionPlan make_plan(int max_degree, const ShuffleTuple& c) {
  if (max_degree < 0) throw std::invalid_argument("max degree must be nonnegative");
  std::int64_t slack = std::max<std::int64_t>(0, excess(c.b0));
  for (const auto& x : c.a) slack = std::max(slack, excess(x));
  PrecisionPlan p{max_degree, slack, max_degree + 1 - slack, 0};
  if (p.guarantee <= 0) {
    throw std::invalid_argument("no positive guarantee at max degree " + std::to_string(max_degree) +
                                " (coefficient slack " + std::to_string(slack) + ")");
  }
  p.work_cap = static_cast<std::int64_t>(c.n()) * (max_degree + 1) + slack;
  return p;
}

PrecisionPlan make_plan(int max_degree, int max_weight) {
  if (max_degree < 0) throw std::invalid_argument("max degree must be nonnegative");
  if (max_weight < 1) throw std::invalid_argument("weight must be positive");
  return PrecisionPlan{max_degree, 0, max_degree + 1, static_cast<std::int64_t>(max_weight) * (max_degree + 1)};
}

RationalFunction power_sum(int d, int s, const FieldPtr& f, std::uint64_t budget) {
  if (d < 0 || s < 1) throw std::invalid_argument("power sum needs d >= 0 and s >= 1");
  const std::uint64_t count = count_monic(f, d, budget);
  // Common denominator prod a^s, numerator sum of the cofactors.
  std::vector<UniPoly> pw;
  pw.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) pw.push_back(pow(monic_at(f, d, i), static_cast<std::uint64_t>(s)));
  // Prefix and suffix products give each cofactor without division.
  std::vector<UniPoly> prefix{UniPoly::constant(f, 1)};
  for (const auto& x : pw) prefix.push_back(prefix.back() * x);
  UniPoly suffix = UniPoly::constant(f, 1);
  UniPoly num(f);
  for (std::uint64_t i = count; i-- > 0;) {
    num += prefix[i] * suffix;
    suffix *= pw[i];
  }
  return RationalFunction(num, prefix.back());
}

ZetaOracle::ZetaOracle(FieldPtr f, PrecisionPlan plan, int max_weight, std::uint64_t budget)
    : field_(std::move(f)), plan_(plan), max_weight_(max_weight) {
  if (max_weight < 1) throw std::invalid_argument("weight must be positive");
  const std::int64_t cap = plan_.work_cap;
  for (int d = 0; d <= plan_.max_degree; ++d) {
    std::vector<LaurentSeries> row;
    for (int s = 1; s <= max_weight; ++s) row.emplace_back(field_, cap, std::vector<Elem>{}, cap);
    if (d >= cap) {
      strata_.push_back(std::move(row));
      continue;
    }
    const std::uint64_t count = count_monic(field_, d, budget);
    std::vector<std::vector<Elem>> acc(static_cast<std::size_t>(max_weight), std::vector<Elem>(static_cast<std::size_t>(cap), 0));
    for (std::uint64_t i = 0; i < count; ++i) {
      const LaurentSeries x = LaurentSeries::from_poly(monic_at(field_, d, i)).inv(cap);
      LaurentSeries xs = x;
      for (int s = 1; s <= max_weight; ++s) {
        if (s > 1) xs = (xs * x).truncate(cap);
        if (xs.is_zero_to_order()) break;
        auto& dst = acc[static_cast<std::size_t>(s - 1)];
        for (std::size_t k = 0; k < xs.coeffs().size(); ++k) {
          auto& slot = dst[static_cast<std::size_t>(xs.valuation()) + k];
          slot = field_->add(slot, xs.coeffs()[k]);
        }
      }
    }
    for (int s = 1; s <= max_weight; ++s) {
      row[static_cast<std::size_t>(s - 1)] = LaurentSeries(field_, 0, std::move(acc[static_cast<std::size_t>(s - 1)]), cap);
    }
    strata_.push_back(std::move(row));
  }
}

const LaurentSeries& ZetaOracle::stratum(int d, int s) const {
  if (d < 0 || d > plan_.max_degree || s < 1 || s > max_weight_) throw std::out_of_range("stratum not computed");
  return strata_[static_cast<std::size_t>(d)][static_cast<std::size_t>(s - 1)];
}

LaurentSeries ZetaOracle::zeta(int s) const {
  LaurentSeries sum(field_);
  for (int d = 0; d <= plan_.max_degree; ++d) sum = sum + stratum(d, s);
  return sum.truncate(static_cast<std::int64_t>(s) * (plan_.max_degree + 1));
}

LaurentSeries ZetaOracle::double_zeta(int s1, int s2) const {
  LaurentSeries sum(field_);
  LaurentSeries below(field_);  // sum of S_{d2}(s2) over d2 < d1
  for (int d = 0; d <= plan_.max_degree; ++d) {
    if (d > 0) sum = sum + stratum(d, s1) * below;
    below = below + stratum(d, s2);
  }
  return sum.truncate(static_cast<std::int64_t>(s1) * (plan_.max_degree + 1));
}

LaurentSeries zeta_value(int s, const PrecisionPlan& plan, const FieldPtr& f) {
  return ZetaOracle(f, plan, s).zeta(s);
}

LaurentSeries double_zeta(int s1, int s2, const PrecisionPlan& plan, const FieldPtr& f) {
  return ZetaOracle(f, plan, std::max(s1, s2)).double_zeta(s1, s2);
}

NumericCheck check_sr_numeric(const ShuffleTuple& c, const PrecisionPlan& plan) {
  validate(c);
  const FieldPtr& f = c.field();
  const int n = c.n();
  const std::int64_t cap = plan.work_cap;
  const ZetaOracle z(f, plan, n);
  LaurentSeries res = z.zeta(c.r) * z.zeta(c.s) - z.double_zeta(c.r, c.s) - z.double_zeta(c.s, c.r) -
                      LaurentSeries::from_rational(c.b0, cap) * z.zeta(n);
  for (int i = 1; i < n; ++i) {
    const RationalFunction& ai = c.a[static_cast<std::size_t>(i - 1)];
    if (ai.is_zero()) continue;
    res = res - LaurentSeries::from_rational(ai, cap) * z.double_zeta(i, n - i);
  }
  NumericCheck out{res, std::min(plan.guarantee, res.exact_order()), std::nullopt};
  if (const auto e = res.first_nonzero(); e && *e < out.guarantee) out.nonzero_at = e;
  return out;
}

}  // namespace fz
