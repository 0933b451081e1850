#pragma once

#include "fz/poly.hpp"

namespace fz {

/// Element of F_q(theta) in lowest terms with a monic denominator.
/// Zero is 0/1.
class RationalFunction {
 public:
  explicit RationalFunction(FieldPtr f);
  explicit RationalFunction(UniPoly num);
  /// Throws std::domain_error when den is zero.
  RationalFunction(UniPoly num, UniPoly den);

  static RationalFunction from_int(FieldPtr f, long long c);

  const FieldPtr& field() const noexcept { return num_.field(); }
  const UniPoly& num() const noexcept { return num_; }
  const UniPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_one(); }
  bool is_canonical() const;

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  /// Throws std::domain_error on division by zero.
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction operator-() const;
  RationalFunction inv() const;

  bool operator==(const RationalFunction& o) const noexcept {
    return num_ == o.num_ && den_ == o.den_;
  }

 private:
  void canonicalize();

  UniPoly num_, den_;
};

}  // namespace fz
