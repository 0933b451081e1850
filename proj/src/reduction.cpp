#include "fz/reduction.hpp"

#include <atomic>
#include <string>

namespace fz {

namespace {

std::atomic<std::uint64_t> g_checked{0};
std::atomic<std::uint64_t> g_failures{0};

constexpr int kMaxLevels = 100000;

void audit(const EPoint& e) {
  bool ok = true;
  for (const auto& s : e.flat()) ok = ok && s.var() == Var::Theta && s.is_canonical();
  g_checked.fetch_add(1, std::memory_order_relaxed);
  if (!ok) {
    g_failures.fetch_add(1, std::memory_order_relaxed);
    throw std::logic_error("reduction produced a non-integral slot");
  }
}

}  // namespace

ModuleVector ModuleVector::zero(int n, const FieldPtr& f) {
  return ModuleVector{n, std::vector<BiPoly>(static_cast<std::size_t>(n), BiPoly(f)), 0};
}

ModuleVector ModuleVector::operator+(const ModuleVector& o) const {
  if (n != o.n || sigma_shift != o.sigma_shift) throw std::invalid_argument("module vector shape mismatch");
  ModuleVector r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}

ModuleVector ModuleVector::times_t_poly(const UniPoly& a) const {
  ModuleVector r = *this;
  for (auto& c : r.coords) c = c.times_t_poly(a);
  return r;
}

EPoint::EPoint(int n, FieldPtr f) : n_(n), field_(std::move(f)) {
  if (n < 1) throw std::invalid_argument("weight must be positive");
  slots_.assign(static_cast<std::size_t>(dimension(n)), UniPoly(field_));
}

void EPoint::check_index(int l, int j) const {
  if (l < 0 || l >= n_ || j < 0 || j >= n_ - l) {
    throw std::out_of_range("slot (" + std::to_string(l) + ", " + std::to_string(j) + ") out of range");
  }
}

const UniPoly& EPoint::slot(int l, int j) const {
  check_index(l, j);
  return slots_[static_cast<std::size_t>(flat_index(n_, l, j))];
}

UniPoly& EPoint::slot(int l, int j) {
  check_index(l, j);
  return slots_[static_cast<std::size_t>(flat_index(n_, l, j))];
}

bool EPoint::is_zero() const {
  for (const auto& s : slots_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

int EPoint::degree_theta() const {
  int d = UniPoly::kZeroDegree;
  for (const auto& s : slots_) d = std::max(d, s.degree());
  return d;
}

EPoint EPoint::operator+(const EPoint& o) const {
  if (n_ != o.n_) throw std::invalid_argument("EPoint weight mismatch");
  EPoint r = *this;
  for (std::size_t i = 0; i < slots_.size(); ++i) r.slots_[i] += o.slots_[i];
  return r;
}

EPoint EPoint::operator-(const EPoint& o) const {
  if (n_ != o.n_) throw std::invalid_argument("EPoint weight mismatch");
  EPoint r = *this;
  for (std::size_t i = 0; i < slots_.size(); ++i) r.slots_[i] -= o.slots_[i];
  return r;
}

bool EPoint::operator==(const EPoint& o) const { return n_ == o.n_ && slots_ == o.slots_; }

EPoint reduce_to_epoint(const ModuleVector& m, const ATContext& at, const ReductionBudget& budget) {
  const int n = m.n;
  if (static_cast<int>(m.coords.size()) != n) throw std::invalid_argument("module vector has wrong length");
  if (n >= 2 && at.max_index < n - 2) throw std::invalid_argument("Anderson-Thakur context too short");
  const FieldPtr& f = at.field;
  EPoint out(n, f);
  // One pass per sigma-level. Delta forgets the level, so contributions from
  // every level accumulate into the same slots.
  std::vector<BiPoly> pending = m.coords;
  for (int level = 0;; ++level) {
    if (level > kMaxLevels) throw std::logic_error("reduction did not terminate");
    bool any = false;
    std::vector<BiPoly> next(static_cast<std::size_t>(n), BiPoly(f));
    for (int l = 0; l < n; ++l) {
      BiPoly& cur = pending[static_cast<std::size_t>(l)];
      if (cur.is_zero()) continue;
      auto split = split_t_minus_theta(std::move(cur), n - l);
      for (int j = 0; j < n - l; ++j) out.slot(l, j) += split.low[static_cast<std::size_t>(j)];
      if (split.quotient.is_zero()) continue;
      // g (t - theta)^{n-l} x_l = sigma(g^{(1)} x_l) - sigma(g^{(1)} H_{l-1} x_0)
      BiPoly g1 = frobenius_twist(split.quotient, 1);
      if (g1.degree_theta() > budget.max_theta_degree) {
        throw BudgetExceeded("theta-degree " + std::to_string(g1.degree_theta()) + " exceeds budget " +
                             std::to_string(budget.max_theta_degree));
      }
      if (l >= 1) next[0] -= g1 * at.h(l - 1);
      next[static_cast<std::size_t>(l)] += g1;
      any = true;
    }
    if (!any) break;
    pending = std::move(next);
  }
  audit(out);
  return out;
}

ModuleVector to_module_vector(const EPoint& u) {
  const int n = u.n();
  ModuleVector m = ModuleVector::zero(n, u.field());
  for (int l = 0; l < n; ++l) {
    std::vector<UniPoly> c;
    for (int j = 0; j < n - l; ++j) c.push_back(u.slot(l, j));
    m.coords[static_cast<std::size_t>(l)] = assemble_from_t_minus_theta(u.field(), c);
  }
  return m;
}

EPoint t_action(const EPoint& u, const ATContext& at, const ReductionBudget& budget) {
  return reduce_to_epoint(to_module_vector(u).times_t_poly(UniPoly::variable(u.field(), Var::T)), at, budget);
}

EPoint rho_action(const UniPoly& a, const EPoint& u, const ATContext& at, const ReductionBudget& budget) {
  if (a.var() != Var::T) throw std::invalid_argument("rho_a needs a polynomial in t");
  EPoint acc(u.n(), u.field());
  for (int k = a.degree(); k >= 0; --k) {
    if (!acc.is_zero()) acc = t_action(acc, at, budget);
    const Elem c = a.coeff(k);
    if (c == 0) continue;
    for (int l = 0; l < u.n(); ++l) {
      for (int j = 0; j < u.n() - l; ++j) acc.slot(l, j) += u.slot(l, j).scaled(c);
    }
  }
  return acc;
}

ValidationStats epoint_validation_stats() { return {g_checked.load(), g_failures.load()}; }

BiMatrix phi_prime_twisted(int n, const ATContext& at) {
  if (n < 2) throw std::invalid_argument("Phi' needs n >= 2");
  const FieldPtr& f = at.field;
  const BiPoly step = frobenius_twist(BiPoly::t_minus_theta_pow(f, 1), 1);
  BiMatrix m(static_cast<std::size_t>(n), std::vector<BiPoly>(static_cast<std::size_t>(n), BiPoly(f)));
  const BiPoly full = pow(step, static_cast<std::uint64_t>(n));
  for (int i = 0; i < n; ++i) {
    m[i][i] = pow(step, static_cast<std::uint64_t>(n - i));
    if (i >= 1) m[i][0] = at.h(i - 1) * full;
  }
  return m;
}

ExtRow baer_sum(const ExtRow& a, const ExtRow& b) {
  if (a.n != b.n || a.entries.size() != b.entries.size()) throw std::invalid_argument("extension row shape mismatch");
  ExtRow r = a;
  for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] += b.entries[i];
  return r;
}

ExtRow scalar_action(const UniPoly& a, const ExtRow& r) {
  ExtRow out = r;
  for (auto& e : out.entries) e = e.times_t_poly(a);
  return out;
}

}  // namespace fz
