#pragma once

#include <random>

#include "fz/poly.hpp"
#include "fz/rational.hpp"

namespace fz::testing {

// Seeded generators so failures reproduce.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Elem elem(const FieldPtr& f) { return static_cast<Elem>(uniform(0, static_cast<int>(f->q()) - 1)); }
  Elem nonzero(const FieldPtr& f) { return static_cast<Elem>(uniform(1, static_cast<int>(f->q()) - 1)); }

  UniPoly uni(const FieldPtr& f, int max_deg, Var v = Var::Theta) {
    std::vector<Elem> c(static_cast<std::size_t>(uniform(0, max_deg + 1)));
    for (auto& x : c) x = elem(f);
    return UniPoly(f, v, std::move(c));
  }

  UniPoly monic(const FieldPtr& f, int deg, Var v = Var::Theta) {
    std::vector<Elem> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = elem(f);
    c.back() = 1;
    return UniPoly(f, v, std::move(c));
  }

  BiPoly bi(const FieldPtr& f, int max_t, int max_theta) {
    std::vector<UniPoly> c;
    const int len = uniform(0, max_t + 1);
    for (int i = 0; i < len; ++i) c.push_back(uni(f, max_theta));
    return BiPoly(f, std::move(c));
  }

  RationalFunction rational(const FieldPtr& f, int max_deg) {
    UniPoly den = uni(f, max_deg);
    while (den.is_zero()) den = uni(f, max_deg);
    return RationalFunction(uni(f, max_deg), den);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace fz::testing
