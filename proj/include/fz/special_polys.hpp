#pragma once

#include <vector>

#include "fz/poly.hpp"

namespace fz {

/// D_0 = 1, D_i = prod_{j<i} (theta^{q^i} - theta^{q^j}).
UniPoly carlitz_D(int i, const FieldPtr& f);

/// Carlitz factorial Gamma_m (m >= 1): product of D_i^{n_i} over the base-q
/// digits n_i of m - 1.
UniPoly carlitz_gamma(int m, const FieldPtr& f);

/// G_i(theta, t) = prod_{j=1}^{i} (t^{q^i} - theta^{q^j}); G_0 = 1.
BiPoly at_numerator(int i, const FieldPtr& f);

/// Anderson-Thakur polynomials H_0..H_N, shared read-only once built.
struct ATContext {
  FieldPtr field;
  int max_index = 0;
  std::vector<UniPoly> D;   // D_i in theta, for q^i <= max(N, 1)
  std::vector<UniPoly> Dt;  // the same with theta = t
  std::vector<BiPoly> H;

  /// Throws std::out_of_range past max_index.
  const BiPoly& h(int n) const;
};

/// Builds H_0..H_N from the generating-series recurrence. Throws
/// std::logic_error if a result is not integral or breaks the degree bound.
ATContext anderson_thakur(int N, const FieldPtr& f);

/// Product of (t^{q^h} - t)^{p^l} over 1 <= i <= n with (q-1) | i, where
/// l = v_p(i) and h is the largest integer with (q^h - 1) | i.
UniPoly annihilator(int n, const FieldPtr& f);

}  // namespace fz
