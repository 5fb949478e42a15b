#pragma once

#include <optional>
#include <span>
#include <vector>

#include "modinv/common.hpp"

namespace modinv::arith {

struct PrimePower {
  u64 prime;
  int exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of a positive integer; factors sorted by prime.
struct Factorization {
  u64 value = 1;
  std::vector<PrimePower> factors;

  /// Product of prime^exponent, recomputed.
  [[nodiscard]] u64 recompose() const;
};

/// Trial division up to 10^6, then Miller-Rabin + Pollard rho for the cofactor.
Factorization factorize(u64 n);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(u64 n);

u64 gcd(u64 a, u64 b);

/// gcd of three signed integers, taking absolute values; gcd(0,0,0) = 0.
u64 gcd3(i64 a, i64 b, i64 c);

/// b in [1, c] with a*b = 1 (mod c), or nullopt when gcd(a, c) > 1.
/// For c == 1 returns 1.
std::optional<u64> mod_inverse(i64 a, u64 c);

u64 divisor_count(u64 n);
u64 divisor_count(const Factorization& f);
int moebius(u64 n);
int moebius(const Factorization& f);
u64 euler_phi(const Factorization& f);

/// All positive divisors in increasing order.
std::vector<u64> divisors(const Factorization& f);

/// Euler totients phi(1..limit) and their running sums N(y).
class TotientTable {
 public:
  static constexpr u64 kDefaultLimitCap = 10'000'000;

  /// Linear sieve. Throws CapacityError if limit > cap.
  explicit TotientTable(u64 limit, u64 cap = kDefaultLimitCap);

  [[nodiscard]] u64 limit() const { return limit_; }
  /// phi(c), 1 <= c <= limit.
  [[nodiscard]] u64 phi(u64 c) const { return phi_[c]; }
  /// N(y) = sum_{c <= y} phi(c); prefix(0) = 0.
  [[nodiscard]] u64 prefix(u64 y) const { return prefix_[y]; }
  [[nodiscard]] std::span<const u64> phi_values() const { return phi_; }
  /// Smallest prime factor of c (spf(1) = 1).
  [[nodiscard]] u64 smallest_prime_factor(u64 c) const { return spf_[c]; }

 private:
  u64 limit_;
  std::vector<u64> phi_;
  std::vector<u64> prefix_;
  std::vector<std::uint32_t> spf_;
};

/// N(X) = sum_{c <= X} phi(c), via a temporary table.
u64 totient_sum(u64 X);

}  // namespace modinv::arith
