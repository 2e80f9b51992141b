#pragma once

#include <cstdint>
#include <stdexcept>

namespace unitlab {

// Exponent arithmetic for group coordinates. Overflow throws instead of
// wrapping, so a result is either exact or an error.
using Exponent = std::int64_t;

inline Exponent checked_add(Exponent x, Exponent y) {
  Exponent r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("unitlab: exponent overflow in addition");
  return r;
}

inline Exponent checked_sub(Exponent x, Exponent y) {
  Exponent r;
  if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("unitlab: exponent overflow in subtraction");
  return r;
}

inline Exponent checked_mul(Exponent x, Exponent y) {
  Exponent r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("unitlab: exponent overflow in multiplication");
  return r;
}

inline Exponent checked_neg(Exponent x) { return checked_sub(0, x); }

inline std::size_t hash_combine(std::size_t seed, std::uint64_t v) {
  v ^= v >> 33;
  v *= 0xff51afd7ed558ccdULL;
  v ^= v >> 33;
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace unitlab
