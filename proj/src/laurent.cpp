#include "fz/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace fz {

namespace {

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  return std::min(a + b, LaurentSeries::kExact);
}

}  // namespace

LaurentSeries::LaurentSeries(FieldPtr f) : field_(std::move(f)), v_(kExact), order_(kExact) {}

LaurentSeries::LaurentSeries(FieldPtr f, std::int64_t valuation, std::vector<Elem> coeffs,
                             std::int64_t exact_order)
    : field_(std::move(f)), v_(valuation), c_(std::move(coeffs)), order_(std::min(exact_order, kExact)) {
  if (!field_) throw std::invalid_argument("null field");
  normalize();
}

void LaurentSeries::normalize() {
  if (v_ >= order_) c_.clear();
  else if (static_cast<std::int64_t>(c_.size()) > order_ - v_) c_.resize(static_cast<std::size_t>(order_ - v_));
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    v_ = order_;
    return;
  }
  c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
  v_ += static_cast<std::int64_t>(lead);
}

LaurentSeries LaurentSeries::one(FieldPtr f) { return LaurentSeries(std::move(f), 0, {1}, kExact); }

LaurentSeries LaurentSeries::from_poly(const UniPoly& p) {
  if (p.is_zero()) return LaurentSeries(p.field());
  std::vector<Elem> c(p.coeffs().rbegin(), p.coeffs().rend());
  return LaurentSeries(p.field(), -p.degree(), std::move(c), kExact);
}

LaurentSeries LaurentSeries::from_rational(const RationalFunction& r, std::int64_t cap) {
  const LaurentSeries num = from_poly(r.num());
  if (r.is_polynomial()) return num.truncate(cap);
  // Inverting the denominator to cap + deg den keeps the product good to cap.
  const std::int64_t shift = std::max<std::int64_t>(0, r.num().degree());
  return (num * from_poly(r.den()).inv(cap + shift)).truncate(cap);
}

Elem LaurentSeries::coefficient(std::int64_t e) const {
  if (e >= order_) throw std::out_of_range("coefficient beyond guaranteed precision");
  if (e < v_ || e >= v_ + static_cast<std::int64_t>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(e - v_)];
}

std::optional<std::int64_t> LaurentSeries::first_nonzero() const {
  if (c_.empty()) return std::nullopt;
  return v_;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
  require_same_field(field_, o.field_);
  const std::int64_t order = std::min(order_, o.order_);
  if (c_.empty() && o.c_.empty()) return LaurentSeries(field_, order, {}, order);
  if (c_.empty()) return o.truncate(order);
  if (o.c_.empty()) return truncate(order);
  const std::int64_t v = std::min(v_, o.v_);
  const std::int64_t end = std::min(order, std::max(v_ + static_cast<std::int64_t>(c_.size()),
                                                    o.v_ + static_cast<std::int64_t>(o.c_.size())));
  if (end <= v) return LaurentSeries(field_, order, {}, order);
  std::vector<Elem> c(static_cast<std::size_t>(end - v), 0);
  for (std::size_t k = 0; k < c_.size() && v_ + static_cast<std::int64_t>(k) < end; ++k) {
    c[static_cast<std::size_t>(v_ - v) + k] = c_[k];
  }
  for (std::size_t k = 0; k < o.c_.size() && o.v_ + static_cast<std::int64_t>(k) < end; ++k) {
    auto& dst = c[static_cast<std::size_t>(o.v_ - v) + k];
    dst = field_->add(dst, o.c_[k]);
  }
  return LaurentSeries(field_, v, std::move(c), order);
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& x : r.c_) x = field_->neg(x);
  return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + (-o); }

LaurentSeries LaurentSeries::scaled(Elem s) const {
  LaurentSeries r = *this;
  for (auto& x : r.c_) x = field_->mul(x, s);
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
  require_same_field(field_, o.field_);
  // A series with no known nonzero term is O(u^order).
  const std::int64_t va = c_.empty() ? order_ : v_;
  const std::int64_t vb = o.c_.empty() ? o.order_ : o.v_;
  const std::int64_t order = std::min(sat_add(va, o.order_), sat_add(vb, order_));
  if (c_.empty() || o.c_.empty()) return LaurentSeries(field_, order, {}, order);
  const std::int64_t v = va + vb;
  std::size_t len = c_.size() + o.c_.size() - 1;
  if (order < kExact) len = std::min<std::size_t>(len, static_cast<std::size_t>(std::max<std::int64_t>(order - v, 0)));
  std::vector<Elem> c(len, 0);
  for (std::size_t i = 0; i < c_.size() && i < len; ++i) {
    if (c_[i] == 0) continue;
    const std::size_t jmax = std::min(o.c_.size(), len - i);
    for (std::size_t j = 0; j < jmax; ++j) c[i + j] = field_->add(c[i + j], field_->mul(c_[i], o.c_[j]));
  }
  return LaurentSeries(field_, v, std::move(c), order);
}

LaurentSeries LaurentSeries::inv(std::int64_t cap) const {
  if (c_.empty()) throw std::domain_error("series is indistinguishable from zero at its precision");
  const std::int64_t order = std::min(is_exact() ? kExact : order_ - 2 * v_, cap);
  const std::int64_t v = -v_;
  if (order <= v) return LaurentSeries(field_, order, {}, order);
  const std::size_t len = static_cast<std::size_t>(order - v);
  const Elem c0inv = field_->inv(c_[0]);
  std::vector<Elem> r(len, 0);
  r[0] = c0inv;
  for (std::size_t k = 1; k < len; ++k) {
    Elem s = 0;
    const std::size_t imax = std::min(k, c_.size() - 1);
    for (std::size_t i = 1; i <= imax; ++i) s = field_->add(s, field_->mul(c_[i], r[k - i]));
    r[k] = field_->neg(field_->mul(s, c0inv));
  }
  return LaurentSeries(field_, v, std::move(r), order);
}

LaurentSeries LaurentSeries::pow(unsigned e) const {
  LaurentSeries r = one(field_);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

LaurentSeries LaurentSeries::truncate(std::int64_t cap) const {
  LaurentSeries r = *this;
  r.order_ = std::min(order_, cap);
  r.normalize();
  return r;
}

}  // namespace fz
