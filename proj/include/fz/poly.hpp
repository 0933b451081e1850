#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fz/field.hpp"

namespace fz {

/// Variable tag. Theta is the variable of A = F_q[theta]; T is the motivic
/// variable t.
enum class Var { Theta, T };

/// Dense univariate polynomial over F_q, lowest degree first. The zero
/// polynomial is the empty coefficient vector.
class UniPoly {
 public:
  /// Degree of the zero polynomial; compares below every real degree.
  static constexpr int kZeroDegree = -1;

  explicit UniPoly(FieldPtr f, Var v = Var::Theta);
  UniPoly(FieldPtr f, Var v, std::vector<Elem> coeffs);

  static UniPoly constant(FieldPtr f, Elem c, Var v = Var::Theta);
  static UniPoly from_int(FieldPtr f, long long c, Var v = Var::Theta);
  static UniPoly monomial(FieldPtr f, Elem c, int degree, Var v = Var::Theta);
  static UniPoly variable(FieldPtr f, Var v = Var::Theta) { return monomial(std::move(f), 1, 1, v); }

  const FieldPtr& field() const noexcept { return field_; }
  Var var() const noexcept { return var_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  Elem coeff(int i) const noexcept {
    return i >= 0 && static_cast<std::size_t>(i) < c_.size() ? c_[i] : 0;
  }
  Elem lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
  std::span<const Elem> coeffs() const noexcept { return c_; }
  /// Leading coefficient nonzero and every coefficient in range.
  bool is_canonical() const noexcept;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const;

  UniPoly scaled(Elem c) const;
  UniPoly monic() const;
  /// Multiply by var^k.
  UniPoly shifted(int k) const;
  /// var -> var^factor.
  UniPoly inflated(std::uint64_t factor) const;
  UniPoly retagged(Var v) const;
  Elem eval(Elem x) const noexcept;
  /// Add c * var^k in place.
  void add_term(Elem c, int k);

  bool operator==(const UniPoly& o) const noexcept;

 private:
  void normalize() noexcept;
  void require_compatible(const UniPoly& o) const;

  FieldPtr field_;
  Var var_;
  std::vector<Elem> c_;
};

/// f = g * quot + rem with deg rem < deg g. Throws std::domain_error on g = 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g);
/// Monic gcd; throws std::domain_error when both are zero.
UniPoly gcd(const UniPoly& f, const UniPoly& g);
/// Monic lcm; zero if either argument is zero.
UniPoly lcm(const UniPoly& f, const UniPoly& g);
UniPoly pow(const UniPoly& f, std::uint64_t e);
/// Same coefficients, variable theta replaced by t.
UniPoly subst_theta_to_t(const UniPoly& f);

/// Element of A[t] = F_q[theta][t]: coefficient j is the theta-polynomial
/// attached to t^j.
class BiPoly {
 public:
  explicit BiPoly(FieldPtr f);
  BiPoly(FieldPtr f, std::vector<UniPoly> coeffs);

  /// theta-polynomial viewed as a constant in t.
  static BiPoly from_theta(const UniPoly& c);
  /// Polynomial in t with F_q coefficients.
  static BiPoly from_t(const UniPoly& a);
  /// (t - theta)^k.
  static BiPoly t_minus_theta_pow(FieldPtr f, int k);

  const FieldPtr& field() const noexcept { return field_; }
  int degree_t() const noexcept { return static_cast<int>(c_.size()) - 1; }
  int degree_theta() const noexcept;
  bool is_zero() const noexcept { return c_.empty(); }
  const UniPoly& coeff(int j) const noexcept;
  const std::vector<UniPoly>& coeffs() const noexcept { return c_; }
  bool is_canonical() const noexcept;
  /// True when no theta appears, i.e. the value lies in F_q[t].
  bool is_theta_free() const noexcept;
  /// Projection to F_q[t]; throws std::invalid_argument if theta appears.
  UniPoly to_t_poly() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly operator-() const;
  BiPoly times_theta(const UniPoly& c) const;
  /// Multiply by a polynomial in t with F_q coefficients.
  BiPoly times_t_poly(const UniPoly& a) const;
  BiPoly scaled(Elem c) const;

  bool operator==(const BiPoly& o) const noexcept;

 private:
  void normalize() noexcept;

  FieldPtr field_;
  std::vector<UniPoly> c_;
};

/// Division by a divisor whose leading t-coefficient is a nonzero constant.
/// f = g * quot + rem, deg_t rem < deg_t g, all coefficients stay in A.
/// Throws std::domain_error for zero or non-monic divisors.
std::pair<BiPoly, BiPoly> divmod(const BiPoly& f, const BiPoly& g);

BiPoly pow(const BiPoly& f, std::uint64_t e);

/// Raise theta-coefficients to the q^k power: theta -> theta^{q^k}
/// (constants in F_q are Frobenius-fixed).
BiPoly frobenius_twist(const BiPoly& f, unsigned k);
UniPoly frobenius_twist(const UniPoly& f, unsigned k);

/// f = quotient * (t - theta)^k + sum_{j<k} low[j] * (t - theta)^j.
struct TMinusThetaSplit {
  BiPoly quotient;
  std::vector<UniPoly> low;
};
TMinusThetaSplit split_t_minus_theta(BiPoly f, int k);

/// Coefficients c_0..c_cap with f = sum c_j (t - theta)^j.
/// Throws std::invalid_argument if deg_t f > cap.
std::vector<UniPoly> expand_in_t_minus_theta(const BiPoly& f, int cap);

/// Inverse of expand_in_t_minus_theta.
BiPoly assemble_from_t_minus_theta(FieldPtr f, std::span<const UniPoly> c);

}  // namespace fz
