#pragma once

#include <cstdint>
#include <stdexcept>

namespace zagreb {

// 64-bit arithmetic that refuses to wrap. Index values grow polynomially
// with graph size and must stay exact; anything past the int64 range is
// reported, never silently truncated.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("index arithmetic exceeds 64-bit range");
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out))
    throw std::overflow_error("index arithmetic exceeds 64-bit range");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("index arithmetic exceeds 64-bit range");
  return out;
}

inline std::int64_t checked_square(std::int64_t a) { return checked_mul(a, a); }

}  // namespace zagreb
