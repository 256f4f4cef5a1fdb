#pragma once

#include <cstdint>

#include "posclass/error.hpp"

namespace posclass {

using Int = std::int64_t;

constexpr Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr Int floor_mod(Int a, Int b) { return a - floor_div(a, b) * b; }

inline Int checked_add(Int a, Int b) {
  Int out = 0;
  if (__builtin_add_overflow(a, b, &out))
    throw Error(ErrorCode::Overflow, "integer overflow in addition");
  return out;
}

inline Int checked_sub(Int a, Int b) {
  Int out = 0;
  if (__builtin_sub_overflow(a, b, &out))
    throw Error(ErrorCode::Overflow, "integer overflow in subtraction");
  return out;
}

inline Int checked_mul(Int a, Int b) {
  Int out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw Error(ErrorCode::Overflow, "integer overflow in multiplication");
  return out;
}

}  // namespace posclass
