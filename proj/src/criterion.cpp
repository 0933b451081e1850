#include "fz/criterion.hpp"

#include <stdexcept>

#include "fz/lucas.hpp"

namespace fz {

std::string to_string(CaseTag c) { return c == CaseTag::Coprime ? "coprime" : "divisible"; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::SRCertified: return "SR certified";
    case Verdict::SRAfterB0Correction: return "SR-after-b0-correction certified";
    case Verdict::NotSR: return "not SR";
  }
  return "";
}

void validate(const ShuffleTuple& c) {
  if (c.r < 1 || c.s < 1) throw std::invalid_argument("r and s must be positive");
  if (static_cast<int>(c.a.size()) != c.n() - 1) {
    throw std::invalid_argument("tuple needs " + std::to_string(c.n()) + " entries, got " +
                                std::to_string(c.a.size() + 1));
  }
  for (const auto& x : c.a) require_same_field(c.field(), x.field());
}

namespace {

UniPoly cleared(const RationalFunction& x, const UniPoly& gamma_c) {
  const RationalFunction y = x * RationalFunction(gamma_c);
  if (!y.is_polynomial()) throw std::logic_error("normalization left a denominator");
  return subst_theta_to_t(y.num());
}

bool divisible(const FieldPtr& f, int n) { return n % static_cast<int>(f->q() - 1) == 0; }

}  // namespace

NormalizedTuple normalize_tuple(const ShuffleTuple& c) {
  validate(c);
  const FieldPtr& f = c.field();
  const int n = c.n();
  std::vector<UniPoly> gam;
  for (int m = 1; m <= n; ++m) gam.push_back(carlitz_gamma(m, f));
  auto G = [&](int m) -> const UniPoly& { return gam[static_cast<std::size_t>(m - 1)]; };

  std::vector<RationalFunction> scaled_a;
  for (int i = 1; i < n; ++i) scaled_a.push_back(c.a[static_cast<std::size_t>(i - 1)] / RationalFunction(G(i) * G(n - i)));
  const RationalFunction scaled_b0 = c.b0 / RationalFunction(G(n));
  const RationalFunction scaled_one = RationalFunction(UniPoly::constant(f, 1)) / RationalFunction(G(c.r) * G(c.s));

  UniPoly gc = scaled_one.den();
  gc = lcm(gc, scaled_b0.den());
  for (const auto& x : scaled_a) gc = lcm(gc, x.den());

  NormalizedTuple nt{gc, cleared(scaled_b0, gc), cleared(scaled_one, gc), {}};
  for (const auto& x : scaled_a) nt.alpha.push_back(cleared(x, gc));
  return nt;
}

ModuleVector build_vc_element(const NormalizedTuple& nt, int r, int s, const ATContext& at) {
  const int n = r + s;
  if (at.max_index < n - 1) throw std::invalid_argument("Anderson-Thakur context must reach H_{n-1}");
  const FieldPtr& f = at.field;
  ModuleVector w = ModuleVector::zero(n, f);
  w.sigma_shift = 1;
  BiPoly x0 = BiPoly::from_t(nt.beta0) * at.h(n - 1) - BiPoly::from_t(nt.gamma0) * at.h(r - 1) * at.h(s - 1);
  for (int i = 1; i < n; ++i) {
    const UniPoly& alpha = nt.alpha[static_cast<std::size_t>(i - 1)];
    if (alpha.is_zero()) continue;
    const BiPoly xi = at.h(n - i - 1).times_t_poly(alpha);
    x0 -= xi * at.h(i - 1);
    w.coords[static_cast<std::size_t>(i)] = xi;
  }
  w.coords[0] = std::move(x0);
  return w;
}

ExtRow ext_row(const NormalizedTuple& nt, int r, int s, const ATContext& at) {
  const int n = r + s;
  const FieldPtr& f = at.field;
  const BiPoly step = frobenius_twist(BiPoly::t_minus_theta_pow(f, 1), 1);
  ExtRow row{n, {}};
  row.entries.push_back((BiPoly::from_t(nt.beta0) * at.h(n - 1) -
                         BiPoly::from_t(nt.gamma0) * at.h(r - 1) * at.h(s - 1)) *
                        pow(step, static_cast<std::uint64_t>(n)));
  for (int i = 1; i < n; ++i) {
    row.entries.push_back(at.h(n - i - 1).times_t_poly(nt.alpha[static_cast<std::size_t>(i - 1)]) *
                          pow(step, static_cast<std::uint64_t>(n - i)));
  }
  return row;
}

BiMatrix phi_c_twisted(const NormalizedTuple& nt, int r, int s, const ATContext& at) {
  const int n = r + s;
  BiMatrix m = phi_prime_twisted(n, at);
  for (auto& row : m) row.emplace_back(at.field);
  ExtRow last = ext_row(nt, r, s, at);
  last.entries.push_back(BiPoly::from_theta(UniPoly::constant(at.field, 1)));
  m.push_back(std::move(last.entries));
  return m;
}

EPoint rho_direct(const UniPoly& a, const ModuleVector& w, const ATContext& at, const ReductionBudget& budget) {
  return reduce_to_epoint(w.times_t_poly(a), at, budget);
}

TorsionReport decide_torsion(const ShuffleTuple& c, const ATContext* shared, const ReductionBudget& budget) {
  validate(c);
  const FieldPtr& f = c.field();
  const int n = c.n();
  std::optional<ATContext> own;
  if (!shared || shared->max_index < n - 1 || !same_field(shared->field, f)) {
    own = anderson_thakur(n - 1, f);
    shared = &*own;
  }
  const NormalizedTuple nt = normalize_tuple(c);
  const ModuleVector w = build_vc_element(nt, c.r, c.s, *shared);
  EPoint vc = reduce_to_epoint(w, *shared, budget);
  UniPoly a = annihilator(n, f);
  EPoint rho = rho_action(a, vc, *shared, budget);
  TorsionReport rep{c, std::move(a), std::move(vc), std::move(rho), false, CaseTag::Coprime, {}, Verdict::NotSR};
  rep.is_torsion = rep.rho_a_vc.is_zero();
  rep.case_tag = divisible(f, n) ? CaseTag::Divisible : CaseTag::Coprime;
  rep.filter_violations = necessary_filter(c);
  if (!rep.is_torsion) rep.verdict = Verdict::NotSR;
  else rep.verdict = rep.case_tag == CaseTag::Coprime ? Verdict::SRCertified : Verdict::SRAfterB0Correction;
  return rep;
}

std::vector<int> necessary_filter(const ShuffleTuple& c) {
  const int n = c.n();
  std::vector<int> out;
  for (int i = 1; i < n && i - 1 < static_cast<int>(c.a.size()); ++i) {
    if (!c.a[static_cast<std::size_t>(i - 1)].is_zero() && !divisible(c.field(), n - i)) out.push_back(i);
  }
  return out;
}

namespace {

long long chen_coefficient(int r, int s, int j, std::uint32_t p) {
  const long long a = lucas_binom(static_cast<std::uint64_t>(j - 1), static_cast<std::uint64_t>(s - 1), p);
  const long long b = lucas_binom(static_cast<std::uint64_t>(j - 1), static_cast<std::uint64_t>(r - 1), p);
  return ((s - 1) % 2 ? -a : a) + ((r - 1) % 2 ? -b : b);
}

}  // namespace

ShuffleTuple chen_tuple(int r, int s, const FieldPtr& f) {
  if (r < 1 || s < 1) throw std::invalid_argument("r and s must be positive");
  const int n = r + s;
  ShuffleTuple c{r, s, RationalFunction::from_int(f, 1), {}};
  for (int i = 1; i < n; ++i) {
    const int j = n - i;
    const long long v = divisible(f, j) ? chen_coefficient(r, s, j, f->p()) : 0;
    c.a.push_back(RationalFunction::from_int(f, v));
  }
  return c;
}

ShuffleTuple to_dr_tuple(const ShuffleTuple& c) {
  validate(c);
  const ShuffleTuple chen = chen_tuple(c.r, c.s, c.field());
  ShuffleTuple d = c;
  d.b0 = c.b0 - chen.b0;
  for (std::size_t i = 0; i < d.a.size(); ++i) d.a[i] = c.a[i] - chen.a[i];
  return d;
}

}  // namespace fz
