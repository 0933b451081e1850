#include "fz/field.hpp"

#include <stdexcept>

namespace fz {

namespace {

using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over F_p.
Coeffs rem_monic(Coeffs a, const Coeffs& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * b[i]) % p);
    }
    trim(a);
  }
  return a;
}

Coeffs unpack(std::uint64_t idx, std::uint32_t p, std::uint32_t len) {
  Coeffs c(len);
  for (auto& d : c) {
    d = static_cast<std::uint32_t>(idx % p);
    idx /= p;
  }
  return c;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  if (poly.empty() || poly.back() != 1) return false;
  const std::uint32_t deg = static_cast<std::uint32_t>(poly.size() - 1);
  if (deg == 0) return false;
  // Every monic candidate divisor of degree 1..deg/2.
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Coeffs div = unpack(idx, p, d);
      div.push_back(1);
      if (rem_monic(poly, div, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> find_irreducible(std::uint32_t p, std::uint32_t m) {
  if (m == 0) throw std::invalid_argument("extension degree must be positive");
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < m; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Coeffs cand = unpack(idx, p, m);
    cand.push_back(1);
    if (is_irreducible(p, cand)) return cand;
  }
  throw std::logic_error("no irreducible polynomial found");
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t m,
                     std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (m == 0) throw std::invalid_argument("extension degree must be positive");
  if (m == 1) {
    if (modulus && !modulus->empty() && modulus->size() != 2) {
      throw std::invalid_argument("modulus degree does not match m");
    }
    return FieldPtr(new Field(p, 1, {}));
  }
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxExtensionOrder) {
      throw std::invalid_argument("extension fields are limited to q <= " +
                                  std::to_string(kMaxExtensionOrder));
    }
  }
  std::vector<std::uint32_t> mod;
  if (modulus) {
    mod = *modulus;
    for (auto& c : mod) c %= p;
    trim(mod);
    if (mod.size() != m + 1) throw std::invalid_argument("modulus degree does not match m");
    if (!is_irreducible(p, mod)) throw std::invalid_argument("modulus is not monic irreducible");
  } else {
    mod = find_irreducible(p, m);
  }
  return FieldPtr(new Field(p, m, std::move(mod)));
}

Field::Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < m_; ++i) q_ *= p_;
  if (m_ > 1) build_tables();
}

void Field::build_tables() {
  const std::size_t q = q_;
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  std::vector<Coeffs> digits(q);
  for (std::size_t a = 0; a < q; ++a) digits[a] = unpack(a, p_, m_);
  auto pack = [&](const Coeffs& c) {
    std::uint32_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p_ + c[i];
    return v;
  };
  for (std::size_t a = 0; a < q; ++a) {
    Coeffs n(m_);
    for (std::uint32_t i = 0; i < m_; ++i) n[i] = (p_ - digits[a][i]) % p_;
    neg_[a] = static_cast<std::uint16_t>(pack(n));
    for (std::size_t b = 0; b < q; ++b) {
      Coeffs s(m_);
      for (std::uint32_t i = 0; i < m_; ++i) s[i] = (digits[a][i] + digits[b][i]) % p_;
      add_[a * q + b] = static_cast<std::uint16_t>(pack(s));
      Coeffs prod(2 * m_ - 1, 0);
      for (std::uint32_t i = 0; i < m_; ++i) {
        for (std::uint32_t j = 0; j < m_; ++j) {
          prod[i + j] = (prod[i + j] + digits[a][i] * digits[b][j]) % p_;
        }
      }
      Coeffs r = rem_monic(prod, modulus_, p_);
      r.resize(m_, 0);
      mul_[a * q + b] = static_cast<std::uint16_t>(pack(r));
    }
  }
  for (std::size_t a = 1; a < q; ++a) {
    for (std::size_t b = 1; b < q; ++b) {
      if (mul_[a * q + b] == 1) {
        inv_[a] = static_cast<std::uint16_t>(b);
        break;
      }
    }
  }
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("division by zero in F_" + std::to_string(q_));
  if (m_ > 1) return inv_[a];
  return pow(a, p_ - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem Field::from_int(long long v) const noexcept {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::vector<std::uint32_t> Field::coords(Elem a) const { return unpack(a, p_, m_); }

Elem Field::from_coords(std::span<const std::uint32_t> c) const {
  if (c.size() != m_) throw std::invalid_argument("expected " + std::to_string(m_) + " coordinates");
  Elem v = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= p_) throw std::invalid_argument("coordinate out of range");
    v = v * p_ + c[i];
  }
  return v;
}

std::string Field::describe() const {
  std::string s = "F_" + std::to_string(q_);
  if (m_ > 1) {
    s += " (mod ";
    bool first = true;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
      if (modulus_[i] == 0) continue;
      if (!first) s += "+";
      first = false;
      if (modulus_[i] != 1 || i == 0) s += std::to_string(modulus_[i]);
      if (i >= 1) s += "z";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    s += ")";
  }
  return s;
}

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (!same_field(a, b)) throw std::invalid_argument("mismatched field");
}

FieldElement::FieldElement(FieldPtr f, Elem v) : field_(std::move(f)), v_(v) {
  if (!field_) throw std::invalid_argument("null field");
  if (v_ >= field_->q()) throw std::invalid_argument("element out of range");
}

FieldElement FieldElement::from_int(FieldPtr f, long long v) {
  const Elem e = f->from_int(v);
  return FieldElement(std::move(f), e);
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_->add(v_, o.v_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_->sub(v_, o.v_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_->mul(v_, o.v_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_->mul(v_, field_->inv(o.v_))};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(v_)}; }
FieldElement FieldElement::inv() const { return {field_, field_->inv(v_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(v_, e)}; }

}  // namespace fz
