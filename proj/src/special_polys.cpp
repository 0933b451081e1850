#include "fz/special_polys.hpp"

#include <stdexcept>
#include <string>

namespace fz {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

UniPoly theta_pow(const FieldPtr& f, std::uint64_t e) {
  return UniPoly::monomial(f, 1, static_cast<int>(e));
}

}  // namespace

UniPoly carlitz_D(int i, const FieldPtr& f) {
  if (i < 0) throw std::invalid_argument("D_i needs i >= 0");
  const std::uint64_t q = f->q();
  UniPoly out = UniPoly::constant(f, 1);
  const UniPoly top = theta_pow(f, ipow(q, static_cast<unsigned>(i)));
  for (int j = 0; j < i; ++j) out *= top - theta_pow(f, ipow(q, static_cast<unsigned>(j)));
  return out;
}

UniPoly carlitz_gamma(int m, const FieldPtr& f) {
  if (m < 1) throw std::invalid_argument("Gamma_m needs m >= 1");
  const std::uint64_t q = f->q();
  UniPoly out = UniPoly::constant(f, 1);
  std::uint64_t rest = static_cast<std::uint64_t>(m) - 1;
  for (int i = 0; rest; ++i, rest /= q) {
    const std::uint64_t digit = rest % q;
    if (digit) out *= pow(carlitz_D(i, f), digit);
  }
  return out;
}

BiPoly at_numerator(int i, const FieldPtr& f) {
  const std::uint64_t q = f->q();
  const BiPoly tq = BiPoly::from_t(UniPoly::monomial(f, 1, static_cast<int>(ipow(q, static_cast<unsigned>(i))), Var::T));
  BiPoly out = BiPoly::from_theta(UniPoly::constant(f, 1));
  for (int j = 1; j <= i; ++j) out = out * (tq - BiPoly::from_theta(theta_pow(f, ipow(q, static_cast<unsigned>(j)))));
  return out;
}

const BiPoly& ATContext::h(int n) const {
  if (n < 0 || n > max_index) {
    throw std::out_of_range("H_" + std::to_string(n) + " not computed (have up to " + std::to_string(max_index) + ")");
  }
  return H[static_cast<std::size_t>(n)];
}

ATContext anderson_thakur(int N, const FieldPtr& f) {
  if (N < 0) throw std::invalid_argument("N must be nonnegative");
  const std::uint64_t q = f->q();
  ATContext at;
  at.field = f;
  at.max_index = N;
  std::vector<BiPoly> G;
  for (int i = 0; i == 0 || ipow(q, static_cast<unsigned>(i)) <= static_cast<std::uint64_t>(N); ++i) {
    at.D.push_back(carlitz_D(i, f));
    at.Dt.push_back(subst_theta_to_t(at.D.back()));
    G.push_back(at_numerator(i, f));
  }
  std::vector<UniPoly> gamma_t;  // Gamma_{m}(t) at index m - 1
  for (int m = 1; m <= N + 1; ++m) gamma_t.push_back(subst_theta_to_t(carlitz_gamma(m, f)));

  const std::uint64_t bound_num = q;
  at.H.push_back(BiPoly::from_theta(UniPoly::constant(f, 1)));
  for (int n = 1; n <= N; ++n) {
    // a_n = sum_i G_i / D_i(t) * H_{n-q^i} / Gamma_{n-q^i+1}(t)
    std::vector<std::pair<BiPoly, UniPoly>> terms;
    UniPoly L = UniPoly::constant(f, 1, Var::T);
    for (std::size_t i = 0; i < G.size(); ++i) {
      const std::uint64_t qi = ipow(q, static_cast<unsigned>(i));
      if (qi > static_cast<std::uint64_t>(n)) break;
      const int k = n - static_cast<int>(qi);
      UniPoly den = at.Dt[i] * gamma_t[static_cast<std::size_t>(k)];
      L = lcm(L, den);
      terms.emplace_back(G[i] * at.H[static_cast<std::size_t>(k)], std::move(den));
    }
    BiPoly num(f);
    for (auto& [b, den] : terms) num += b.times_t_poly(divmod(L, den).first);
    auto [h, rem] = divmod(num.times_t_poly(gamma_t[static_cast<std::size_t>(n)]), BiPoly::from_t(L));
    if (!rem.is_zero()) throw std::logic_error("H_" + std::to_string(n) + " is not integral");
    const int bound = static_cast<int>(static_cast<std::uint64_t>(n) * bound_num / (q - 1));
    if (h.degree_theta() > bound) {
      throw std::logic_error("H_" + std::to_string(n) + " exceeds the theta-degree bound");
    }
    at.H.push_back(std::move(h));
  }
  return at;
}

UniPoly annihilator(int n, const FieldPtr& f) {
  if (n < 1) throw std::invalid_argument("annihilator needs n >= 1");
  const std::uint64_t q = f->q(), p = f->p();
  UniPoly out = UniPoly::constant(f, 1, Var::T);
  for (std::uint64_t i = 1; i <= static_cast<std::uint64_t>(n); ++i) {
    if (i % (q - 1) != 0) continue;
    std::uint64_t pl = 1;
    for (std::uint64_t r = i; r % p == 0; r /= p) pl *= p;
    unsigned h = 1;
    for (unsigned k = 2; ipow(q, k) - 1 <= i; ++k) {
      if (i % (ipow(q, k) - 1) == 0) h = k;
    }
    // (t^{q^h} - t)^{p^l} = t^{q^h p^l} - t^{p^l} in characteristic p.
    const UniPoly factor = UniPoly::monomial(f, 1, static_cast<int>(ipow(q, h) * pl), Var::T) -
                           UniPoly::monomial(f, 1, static_cast<int>(pl), Var::T);
    out *= factor;
  }
  return out;
}

}  // namespace fz
