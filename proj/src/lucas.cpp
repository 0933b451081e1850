#include "fz/lucas.hpp"

#include <stdexcept>
#include <vector>

namespace fz {

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// C(a, b) mod p for digits a, b < p.
std::uint64_t small_binom(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (b > a) return 0;
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < b; ++i) {
    num = num * ((a - i) % p) % p;
    den = den * ((i + 1) % p) % p;
  }
  return num * pow_mod(den, p - 2, p) % p;
}

}  // namespace

std::uint32_t lucas_binom(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
  if (p < 2) throw std::invalid_argument("modulus must be prime");
  if (b > a) return 0;
  std::uint64_t r = 1;
  while (b > 0 || a > 0) {
    r = r * small_binom(a % p, b % p, p) % p;
    if (r == 0) return 0;
    a /= p;
    b /= p;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace fz
