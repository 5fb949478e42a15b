#include "modinv/exact.hpp"

#include <cmath>

namespace modinv::exact {

int bit_length(u128 v) {
  int bits = 0;
  while (v != 0) {
    v >>= 1;
    ++bits;
  }
  return bits;
}

int compare_fraction_double(u64 num, u64 den, double t) {
  if (t < 0) return 1;
  if (t == 0) return num == 0 ? 0 : 1;
  if (num == 0) return -1;
  int e = 0;
  const double f = std::frexp(t, &e);  // t = f * 2^e, f in [0.5, 1)
  const u64 mantissa = static_cast<u64>(std::ldexp(f, 53));
  const int k = e - 53;  // t = mantissa * 2^k exactly

  // Compare num * 2^lhs_shift with (mantissa * den) * 2^rhs_shift.
  u128 lhs = num;
  u128 rhs = static_cast<u128>(mantissa) * den;
  int lhs_shift = k < 0 ? -k : 0;
  int rhs_shift = k > 0 ? k : 0;
  const int lhs_bits = bit_length(lhs) + lhs_shift;
  const int rhs_bits = bit_length(rhs) + rhs_shift;
  if (lhs_bits != rhs_bits) return lhs_bits < rhs_bits ? -1 : 1;
  // Equal bit lengths: align both to that length (at most 116 bits here).
  lhs <<= (lhs_bits - bit_length(lhs));
  rhs <<= (rhs_bits - bit_length(rhs));
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

}  // namespace modinv::exact
