#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <string>

#include "xdp/error.hpp"

namespace xdp {

using dim_t = std::uint64_t;

inline dim_t checked_mul(dim_t a, dim_t b) {
  dim_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("dimension product overflows 64 bits: " +
                        std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

inline dim_t checked_lcm(dim_t a, dim_t b) {
  if (a == 0 || b == 0) {
    throw InvalidDimensionError("lcm of a zero dimension");
  }
  return checked_mul(a / std::gcd(a, b), b);
}

inline dim_t checked_product(std::span<const dim_t> dims) {
  dim_t p = 1;
  for (dim_t d : dims) p = checked_mul(p, d);
  return p;
}

}  // namespace xdp
