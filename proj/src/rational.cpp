#include "fz/rational.hpp"

#include <stdexcept>

namespace fz {

RationalFunction::RationalFunction(FieldPtr f)
    : num_(f, Var::Theta), den_(UniPoly::constant(f, 1)) {}

RationalFunction::RationalFunction(UniPoly num)
    : num_(std::move(num)), den_(UniPoly::constant(num_.field(), 1)) {
  if (num_.var() != Var::Theta) throw std::invalid_argument("rational functions live in theta");
}

RationalFunction::RationalFunction(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.var() != Var::Theta || den_.var() != Var::Theta) {
    throw std::invalid_argument("rational functions live in theta");
  }
  require_same_field(num_.field(), den_.field());
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  canonicalize();
}

RationalFunction RationalFunction::from_int(FieldPtr f, long long c) {
  return RationalFunction(UniPoly::from_int(std::move(f), c));
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = UniPoly::constant(num_.field(), 1);
    return;
  }
  const UniPoly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  if (!den_.is_monic()) {
    const Elem s = num_.field()->inv(den_.lead());
    num_ = num_.scaled(s);
    den_ = den_.scaled(s);
  }
}

bool RationalFunction::is_canonical() const {
  if (!den_.is_monic()) return false;
  if (num_.is_zero()) return den_.is_one();
  return gcd(num_, den_).is_one();
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const { return *this * o.inv(); }

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational function");
  return RationalFunction(den_, num_);
}

}  // namespace fz
