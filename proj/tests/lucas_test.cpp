#include <gtest/gtest.h>

#include "fz/lucas.hpp"

namespace fz {
namespace {

TEST(Lucas, Examples) {
  EXPECT_EQ(lucas_binom(4, 2, 3), 0u);
  EXPECT_EQ(lucas_binom(3, 1, 3), 0u);
  EXPECT_EQ(lucas_binom(9, 0, 7), 1u);
  EXPECT_EQ(lucas_binom(0, 0, 2), 1u);
  EXPECT_EQ(lucas_binom(2, 5, 3), 0u);
}

TEST(Lucas, AgreesWithExactBinomials) {
  // C(a, b) for a <= 30 fits in 64 bits; reduce the exact value.
  auto exact = [](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
    if (b > a) return 0;
    std::uint64_t c = 1;
    for (std::uint64_t i = 0; i < b; ++i) c = c * (a - i) / (i + 1);
    return c;
  };
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
    for (std::uint64_t a = 0; a <= 30; ++a) {
      for (std::uint64_t b = 0; b <= 30; ++b) {
        EXPECT_EQ(lucas_binom(a, b, p), exact(a, b) % p) << a << " " << b << " " << p;
      }
    }
  }
}

}  // namespace
}  // namespace fz
