#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fz/poly.hpp"
#include "fz/special_polys.hpp"

namespace fz {

/// sigma^sigma_shift applied to sum_l coords[l] * x_l in M'.
struct ModuleVector {
  int n = 0;
  std::vector<BiPoly> coords;
  int sigma_shift = 0;

  static ModuleVector zero(int n, const FieldPtr& f);
  ModuleVector operator+(const ModuleVector& o) const;
  /// Multiply every coordinate by a polynomial in t.
  ModuleVector times_t_poly(const UniPoly& a) const;
};

/// Point of E'(A): one theta-polynomial per basis element (t - theta)^j x_l,
/// 0 <= l < n, 0 <= j < n - l. Flat order is block l ascending, and inside
/// a block j descending.
class EPoint {
 public:
  EPoint(int n, FieldPtr f);

  static int dimension(int n) { return n * (n + 1) / 2; }
  static int offset(int n, int l) { return l * n - l * (l - 1) / 2; }
  static int flat_index(int n, int l, int j) { return offset(n, l) + (n - 1 - l - j); }

  int n() const noexcept { return n_; }
  const FieldPtr& field() const noexcept { return field_; }
  const UniPoly& slot(int l, int j) const;
  UniPoly& slot(int l, int j);
  const std::vector<UniPoly>& flat() const noexcept { return slots_; }
  bool is_zero() const;
  int degree_theta() const;

  EPoint operator+(const EPoint& o) const;
  EPoint operator-(const EPoint& o) const;
  bool operator==(const EPoint& o) const;

 private:
  void check_index(int l, int j) const;

  int n_;
  FieldPtr field_;
  std::vector<UniPoly> slots_;
};

/// Thrown when a reduction would produce theta-degrees past the budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ReductionBudget {
  int max_theta_degree = 1 << 21;
};

/// Delta of the element: its coordinates over the sigma-basis modulo
/// (sigma - 1)M'. Independent of sigma_shift.
EPoint reduce_to_epoint(const ModuleVector& m, const ATContext& at, const ReductionBudget& budget = {});

/// Canonical preimage sum u_{l,j} (t - theta)^j x_l.
ModuleVector to_module_vector(const EPoint& u);

/// rho_t(u) = Delta(t * m_u).
EPoint t_action(const EPoint& u, const ATContext& at, const ReductionBudget& budget = {});

/// rho_a(u) by Horner's rule in rho_t.
EPoint rho_action(const UniPoly& a, const EPoint& u, const ATContext& at, const ReductionBudget& budget = {});

/// Slot integrality audit over every EPoint produced by reduce_to_epoint.
struct ValidationStats {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
};
ValidationStats epoint_validation_stats();

using BiMatrix = std::vector<std::vector<BiPoly>>;

/// Twisted Phi'^{(1)}: diagonal (t - theta^q)^{n-i}, first column below it
/// H_{i-1} (t - theta^q)^n.
BiMatrix phi_prime_twisted(int n, const ATContext& at);

/// Bottom row of an extension matrix, stored once twisted.
struct ExtRow {
  int n = 0;
  std::vector<BiPoly> entries;
};

ExtRow baer_sum(const ExtRow& a, const ExtRow& b);
ExtRow scalar_action(const UniPoly& a, const ExtRow& r);

}  // namespace fz
