#include "fz/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace fz {

namespace {

// Schoolbook product. Small prime fields accumulate in 64 bits and reduce
// once per output coefficient.
std::vector<Elem> mul_coeffs(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Elem> out(a.size() + b.size() - 1, 0);
  if (f.is_prime_field() && f.p() < (1u << 16)) {
    const std::uint64_t p = f.p();
    std::vector<std::uint64_t> acc(out.size(), 0);
    // Each partial product is < 2^32, so 2^31 of them fit.
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::uint64_t ai = a[i];
      if (ai == 0) continue;
      std::uint64_t* dst = acc.data() + i;
      for (std::size_t j = 0; j < b.size(); ++j) dst[j] += ai * b[j];
    }
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = static_cast<Elem>(acc[k] % p);
    return out;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(FieldPtr f, Var v) : field_(std::move(f)), var_(v) {
  if (!field_) throw std::invalid_argument("null field");
}

UniPoly::UniPoly(FieldPtr f, Var v, std::vector<Elem> coeffs)
    : field_(std::move(f)), var_(v), c_(std::move(coeffs)) {
  if (!field_) throw std::invalid_argument("null field");
  for (Elem c : c_) {
    if (c >= field_->q()) throw std::invalid_argument("coefficient out of range");
  }
  normalize();
}

UniPoly UniPoly::constant(FieldPtr f, Elem c, Var v) { return UniPoly(std::move(f), v, {c}); }

UniPoly UniPoly::from_int(FieldPtr f, long long c, Var v) {
  const Elem e = f->from_int(c);
  return UniPoly(std::move(f), v, {e});
}

UniPoly UniPoly::monomial(FieldPtr f, Elem c, int degree, Var v) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::vector<Elem> cs(static_cast<std::size_t>(degree) + 1, 0);
  cs.back() = c;
  return UniPoly(std::move(f), v, std::move(cs));
}

bool UniPoly::is_canonical() const noexcept {
  if (!c_.empty() && c_.back() == 0) return false;
  return std::all_of(c_.begin(), c_.end(), [&](Elem c) { return c < field_->q(); });
}

void UniPoly::normalize() noexcept {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void UniPoly::require_compatible(const UniPoly& o) const {
  require_same_field(field_, o.field_);
  if (var_ != o.var_) throw std::invalid_argument("mixing polynomials in theta and t");
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  require_compatible(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->add(c_[i], o.c_[i]);
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  require_compatible(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->sub(c_[i], o.c_[i]);
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  require_compatible(o);
  c_ = mul_coeffs(*field_, c_, o.c_);
  normalize();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly r = a;
  r *= b;
  return r;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = field_->neg(c);
  return r;
}

UniPoly UniPoly::scaled(Elem s) const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = field_->mul(c, s);
  r.normalize();
  return r;
}

UniPoly UniPoly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scaled(field_->inv(lead()));
}

UniPoly UniPoly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  if (is_zero() || k == 0) return *this;
  UniPoly r(field_, var_);
  r.c_.assign(static_cast<std::size_t>(k), 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

UniPoly UniPoly::inflated(std::uint64_t factor) const {
  if (factor == 0) throw std::invalid_argument("inflation factor must be positive");
  if (factor == 1 || is_constant()) return *this;
  UniPoly r(field_, var_);
  r.c_.assign(static_cast<std::size_t>(degree()) * factor + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * factor] = c_[i];
  return r;
}

UniPoly UniPoly::retagged(Var v) const {
  UniPoly r = *this;
  r.var_ = v;
  return r;
}

Elem UniPoly::eval(Elem x) const noexcept {
  Elem acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), c_[i]);
  return acc;
}

void UniPoly::add_term(Elem c, int k) {
  if (c == 0) return;
  if (static_cast<std::size_t>(k) >= c_.size()) c_.resize(static_cast<std::size_t>(k) + 1, 0);
  c_[k] = field_->add(c_[k], c);
  normalize();
}

bool UniPoly::operator==(const UniPoly& o) const noexcept {
  return var_ == o.var_ && c_ == o.c_ && same_field(field_, o.field_);
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g) {
  if (g.is_zero()) throw std::domain_error("polynomial division by zero");
  if (f.var() != g.var()) throw std::invalid_argument("mixing polynomials in theta and t");
  require_same_field(f.field(), g.field());
  const Field& F = *f.field();
  const int dg = g.degree();
  if (f.degree() < dg) return {UniPoly(f.field(), f.var()), f};
  std::vector<Elem> rem(f.coeffs().begin(), f.coeffs().end());
  std::vector<Elem> quot(static_cast<std::size_t>(f.degree() - dg) + 1, 0);
  const Elem inv_lead = F.inv(g.lead());
  const auto gc = g.coeffs();
  for (int k = f.degree() - dg; k >= 0; --k) {
    const Elem c = F.mul(rem[k + dg], inv_lead);
    quot[k] = c;
    if (c == 0) continue;
    for (int i = 0; i <= dg; ++i) rem[k + i] = F.sub(rem[k + i], F.mul(c, gc[i]));
  }
  rem.resize(static_cast<std::size_t>(dg));
  return {UniPoly(f.field(), f.var(), std::move(quot)), UniPoly(f.field(), f.var(), std::move(rem))};
}

UniPoly gcd(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  UniPoly a = f, b = g;
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly lcm(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() || g.is_zero()) return UniPoly(f.field(), f.var());
  return divmod(f * g, gcd(f, g)).first.monic();
}

UniPoly pow(const UniPoly& f, std::uint64_t e) {
  UniPoly r = UniPoly::constant(f.field(), 1, f.var());
  UniPoly b = f;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

UniPoly subst_theta_to_t(const UniPoly& f) { return f.retagged(Var::T); }

UniPoly frobenius_twist(const UniPoly& f, unsigned k) {
  std::uint64_t factor = 1;
  for (unsigned i = 0; i < k; ++i) factor *= f.field()->q();
  return f.inflated(factor);
}

// ---------------------------------------------------------------- BiPoly

BiPoly::BiPoly(FieldPtr f) : field_(std::move(f)) {
  if (!field_) throw std::invalid_argument("null field");
}

BiPoly::BiPoly(FieldPtr f, std::vector<UniPoly> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
  if (!field_) throw std::invalid_argument("null field");
  for (auto& c : c_) {
    require_same_field(field_, c.field());
    if (c.var() != Var::Theta) throw std::invalid_argument("A[t] coefficients must be polynomials in theta");
  }
  normalize();
}

BiPoly BiPoly::from_theta(const UniPoly& c) {
  if (c.var() != Var::Theta) throw std::invalid_argument("expected a polynomial in theta");
  return BiPoly(c.field(), {c});
}

BiPoly BiPoly::from_t(const UniPoly& a) {
  if (a.var() != Var::T) throw std::invalid_argument("expected a polynomial in t");
  std::vector<UniPoly> cs;
  cs.reserve(a.coeffs().size());
  for (Elem c : a.coeffs()) cs.push_back(UniPoly::constant(a.field(), c));
  return BiPoly(a.field(), std::move(cs));
}

BiPoly BiPoly::t_minus_theta_pow(FieldPtr f, int k) {
  BiPoly base(f, {UniPoly::monomial(f, f->neg(1), 1), UniPoly::constant(f, 1)});
  return pow(base, static_cast<std::uint64_t>(k));
}

int BiPoly::degree_theta() const noexcept {
  int d = UniPoly::kZeroDegree;
  for (const auto& c : c_) d = std::max(d, c.degree());
  return d;
}

const UniPoly& BiPoly::coeff(int j) const noexcept {
  static thread_local std::vector<std::pair<const Field*, UniPoly>> zeros;
  if (j >= 0 && static_cast<std::size_t>(j) < c_.size()) return c_[j];
  for (const auto& [fp, z] : zeros) {
    if (fp == field_.get()) return z;
  }
  zeros.emplace_back(field_.get(), UniPoly(field_));
  return zeros.back().second;
}

bool BiPoly::is_canonical() const noexcept {
  if (!c_.empty() && c_.back().is_zero()) return false;
  return std::all_of(c_.begin(), c_.end(), [](const UniPoly& c) { return c.is_canonical(); });
}

bool BiPoly::is_theta_free() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](const UniPoly& c) { return c.is_constant(); });
}

UniPoly BiPoly::to_t_poly() const {
  std::vector<Elem> cs;
  cs.reserve(c_.size());
  for (const auto& c : c_) {
    if (!c.is_constant()) throw std::invalid_argument("element of A[t] is not in F_q[t]");
    cs.push_back(c.coeff(0));
  }
  return UniPoly(field_, Var::T, std::move(cs));
}

void BiPoly::normalize() noexcept {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  require_same_field(field_, o.field_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), UniPoly(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  require_same_field(field_, o.field_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), UniPoly(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  require_same_field(a.field_, b.field_);
  if (a.is_zero() || b.is_zero()) return BiPoly(a.field_);
  std::vector<UniPoly> out(a.c_.size() + b.c_.size() - 1, UniPoly(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      out[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return BiPoly(a.field_, std::move(out));
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

BiPoly BiPoly::times_theta(const UniPoly& c) const {
  BiPoly r = *this;
  for (auto& x : r.c_) x *= c;
  r.normalize();
  return r;
}

BiPoly BiPoly::times_t_poly(const UniPoly& a) const { return *this * from_t(a); }

BiPoly BiPoly::scaled(Elem s) const {
  BiPoly r = *this;
  for (auto& x : r.c_) x = x.scaled(s);
  r.normalize();
  return r;
}

bool BiPoly::operator==(const BiPoly& o) const noexcept {
  return c_ == o.c_ && same_field(field_, o.field_);
}

std::pair<BiPoly, BiPoly> divmod(const BiPoly& f, const BiPoly& g) {
  if (g.is_zero()) throw std::domain_error("division by zero in A[t]");
  const UniPoly& lead = g.coeffs().back();
  if (!lead.is_constant()) throw std::domain_error("divisor is not monic in t");
  require_same_field(f.field(), g.field());
  const FieldPtr& F = f.field();
  const int dg = g.degree_t();
  if (f.degree_t() < dg) return {BiPoly(F), f};
  const Elem inv_lead = F->inv(lead.coeff(0));
  std::vector<UniPoly> rem = f.coeffs();
  std::vector<UniPoly> quot(static_cast<std::size_t>(f.degree_t() - dg) + 1, UniPoly(F));
  for (int k = f.degree_t() - dg; k >= 0; --k) {
    UniPoly c = rem[k + dg].scaled(inv_lead);
    if (c.is_zero()) continue;
    for (int i = 0; i <= dg; ++i) {
      if (!g.coeff(i).is_zero()) rem[k + i] -= c * g.coeff(i);
    }
    quot[k] = std::move(c);
  }
  rem.resize(static_cast<std::size_t>(dg), UniPoly(F));
  return {BiPoly(F, std::move(quot)), BiPoly(F, std::move(rem))};
}

BiPoly pow(const BiPoly& f, std::uint64_t e) {
  BiPoly r = BiPoly::from_theta(UniPoly::constant(f.field(), 1));
  BiPoly b = f;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

BiPoly frobenius_twist(const BiPoly& f, unsigned k) {
  if (k == 0) return f;
  std::vector<UniPoly> cs;
  cs.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) cs.push_back(frobenius_twist(c, k));
  return BiPoly(f.field(), std::move(cs));
}

TMinusThetaSplit split_t_minus_theta(BiPoly f, int k) {
  const FieldPtr F = f.field();
  std::vector<UniPoly> work = f.coeffs();
  std::vector<UniPoly> low;
  low.reserve(static_cast<std::size_t>(std::max(k, 0)));
  // Synthetic division by (t - theta): g_{j-1} = f_j + theta * g_j,
  // remainder f_0 + theta * g_0.
  for (int step = 0; step < k; ++step) {
    if (work.empty()) {
      low.emplace_back(F);
      continue;
    }
    for (std::size_t j = work.size() - 1; j >= 1; --j) {
      work[j - 1] += work[j].shifted(1);
    }
    low.push_back(std::move(work.front()));
    work.erase(work.begin());
  }
  return {BiPoly(F, std::move(work)), std::move(low)};
}

std::vector<UniPoly> expand_in_t_minus_theta(const BiPoly& f, int cap) {
  if (f.degree_t() > cap) {
    throw std::invalid_argument("t-degree " + std::to_string(f.degree_t()) + " exceeds cap " +
                                std::to_string(cap));
  }
  auto split = split_t_minus_theta(f, cap + 1);
  return std::move(split.low);
}

BiPoly assemble_from_t_minus_theta(FieldPtr f, std::span<const UniPoly> c) {
  // Horner in (t - theta).
  const BiPoly step = BiPoly::t_minus_theta_pow(f, 1);
  BiPoly acc(f);
  for (std::size_t j = c.size(); j-- > 0;) acc = acc * step + BiPoly::from_theta(c[j]);
  return acc;
}

}  // namespace fz
