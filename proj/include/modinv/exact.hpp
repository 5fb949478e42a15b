#pragma once

#include "modinv/common.hpp"

namespace modinv::exact {

/// Sign of num/den - t, computed exactly. Requires den > 0, num and den < 2^62,
/// t finite.
int compare_fraction_double(u64 num, u64 den, double t);

/// Sign of a/b - c/d for b, d > 0 (all below 2^63).
inline int compare_fractions(u64 a, u64 b, u64 c, u64 d) {
  const u128 lhs = static_cast<u128>(a) * d;
  const u128 rhs = static_cast<u128>(c) * b;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

/// True when num/den lies in the closed interval [lo, hi] of doubles.
inline bool fraction_in_closed(u64 num, u64 den, double lo, double hi) {
  return compare_fraction_double(num, den, lo) >= 0 && compare_fraction_double(num, den, hi) <= 0;
}

/// Number of significant bits (0 for 0).
int bit_length(u128 v);

}  // namespace modinv::exact
