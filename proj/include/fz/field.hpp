#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fz {

/// Raw element of F_q. For q = p^m the value packs the coordinates over the
/// power basis 1, z, ..., z^{m-1} in base p, so the prime subfield is 0..p-1.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(std::uint64_t n);

/// Monic irreducible test over F_p by trial division. Coefficients low first.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

/// Smallest monic irreducible of degree m over F_p in the packed ordering.
std::vector<std::uint32_t> find_irreducible(std::uint32_t p, std::uint32_t m);

/// F_q with q = p^m. Prime fields do arithmetic with a single modular
/// reduction; extensions (q <= 1024) use precomputed tables.
class Field {
 public:
  static constexpr std::uint32_t kMaxExtensionOrder = 1024;

  /// Throws std::invalid_argument on a composite p, m == 0, an oversized
  /// extension, or a modulus that is not monic irreducible of degree m.
  static FieldPtr make(std::uint32_t p, std::uint32_t m = 1,
                       std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);
  static FieldPtr prime(std::uint32_t p) { return make(p); }

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t m() const noexcept { return m_; }
  std::uint32_t q() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return m_ == 1; }
  /// Empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Elem add(Elem a, Elem b) const noexcept {
    if (m_ == 1) {
      Elem s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    return add_[a * q_ + b];
  }
  Elem neg(Elem a) const noexcept {
    if (m_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_[a];
  }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const noexcept {
    if (m_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    return mul_[a * q_ + b];
  }
  /// Throws std::domain_error on zero.
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  /// Image of an integer in the prime subfield.
  Elem from_int(long long v) const noexcept;
  std::vector<std::uint32_t> coords(Elem a) const;
  /// Throws std::invalid_argument unless there are exactly m residues < p.
  Elem from_coords(std::span<const std::uint32_t> c) const;
  /// True when a lies in F_p.
  bool in_prime_subfield(Elem a) const noexcept { return a < p_; }

  bool operator==(const Field& o) const noexcept {
    return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
  }

  std::string describe() const;

 private:
  Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);
  void build_tables();

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint16_t> add_, mul_;
  std::vector<std::uint16_t> neg_, inv_;
};

/// Same field, either by identity or by equal (p, m, modulus).
inline bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
  return a == b || (a && b && *a == *b);
}

/// Throws std::invalid_argument("mismatched field") unless same_field(a, b).
void require_same_field(const FieldPtr& a, const FieldPtr& b);

/// Checked element wrapper; the polynomial layers work on raw Elem values.
class FieldElement {
 public:
  FieldElement(FieldPtr f, Elem v);
  static FieldElement from_int(FieldPtr f, long long v);

  const FieldPtr& field() const noexcept { return field_; }
  Elem value() const noexcept { return v_; }
  std::vector<std::uint32_t> coords() const { return field_->coords(v_); }
  bool is_zero() const noexcept { return v_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;

  bool operator==(const FieldElement& o) const noexcept {
    return v_ == o.v_ && same_field(field_, o.field_);
  }

 private:
  FieldPtr field_;
  Elem v_;
};

}  // namespace fz
