#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "fz/rational.hpp"

namespace fz {

/// Truncated element of F_q((1/theta)). Exponent e stands for theta^{-e}.
/// Every coefficient with exponent below exact_order() is correct; nothing is
/// claimed beyond it.
class LaurentSeries {
 public:
  /// exact_order() of a series known in full (a finite sum).
  static constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max() / 4;

  /// Zero, known exactly.
  explicit LaurentSeries(FieldPtr f);
  /// coeffs[k] is the coefficient of exponent valuation + k.
  LaurentSeries(FieldPtr f, std::int64_t valuation, std::vector<Elem> coeffs, std::int64_t exact_order);

  static LaurentSeries one(FieldPtr f);
  static LaurentSeries from_poly(const UniPoly& theta_poly);
  /// Expansion correct below exponent cap.
  static LaurentSeries from_rational(const RationalFunction& r, std::int64_t cap);

  const FieldPtr& field() const noexcept { return field_; }
  /// Exponent of the first stored term; equals exact_order() when no nonzero
  /// term is known.
  std::int64_t valuation() const noexcept { return v_; }
  const std::vector<Elem>& coeffs() const noexcept { return c_; }
  std::int64_t exact_order() const noexcept { return order_; }
  bool is_exact() const noexcept { return order_ >= kExact; }
  /// True when every coefficient below exact_order() is zero.
  bool is_zero_to_order() const noexcept { return c_.empty(); }
  /// Throws std::out_of_range for exponents at or past exact_order().
  Elem coefficient(std::int64_t e) const;
  std::optional<std::int64_t> first_nonzero() const;

  LaurentSeries operator+(const LaurentSeries& o) const;
  LaurentSeries operator-(const LaurentSeries& o) const;
  LaurentSeries operator*(const LaurentSeries& o) const;
  LaurentSeries operator-() const;
  LaurentSeries scaled(Elem s) const;
  /// Throws std::domain_error when no nonzero coefficient is known.
  LaurentSeries inv(std::int64_t cap) const;
  LaurentSeries pow(unsigned e) const;
  LaurentSeries truncate(std::int64_t cap) const;

 private:
  void normalize();

  FieldPtr field_;
  std::int64_t v_;
  std::vector<Elem> c_;
  std::int64_t order_;
};

}  // namespace fz
