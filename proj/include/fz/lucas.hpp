#pragma once

#include <cstdint>

namespace fz {

/// C(a, b) mod p from the base-p digits of a and b; zero when b > a.
std::uint32_t lucas_binom(std::uint64_t a, std::uint64_t b, std::uint32_t p);

}  // namespace fz
