#include "modinv/arith.hpp"

#include <algorithm>
#include <string>

namespace modinv::arith {

namespace {

constexpr u64 kTrialLimit = 1'000'000;

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  // Brent's variant with a fixed sequence of increments for determinism.
  for (u64 inc = 1;; ++inc) {
    u64 y = 2, c = inc, m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_large(u64 n, std::vector<u64>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  const u64 d = pollard_rho(n);
  factor_large(d, primes);
  factor_large(n / d, primes);
}

}  // namespace

u64 Factorization::recompose() const {
  u64 v = 1;
  for (const auto& pp : factors) {
    for (int e = 0; e < pp.exponent; ++e) v *= pp.prime;
  }
  return v;
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    const u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 gcd3(i64 a, i64 b, i64 c) {
  auto mag = [](i64 v) { return v < 0 ? static_cast<u64>(-(v + 1)) + 1 : static_cast<u64>(v); };
  return gcd(gcd(mag(a), mag(b)), mag(c));
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

Factorization factorize(u64 n) {
  if (n == 0) throw PreconditionError("factorize: n must be >= 1");
  Factorization f;
  f.value = n;
  u64 m = n;
  auto take = [&](u64 p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) f.factors.push_back({p, e});
  };
  take(2);
  for (u64 p = 3; p <= kTrialLimit && p * p <= m; p += 2) take(p);
  if (m > 1) {
    if (m <= kTrialLimit * kTrialLimit) {
      // No factor <= 10^6 remains, so m itself is prime.
      f.factors.push_back({m, 1});
    } else {
      std::vector<u64> primes;
      factor_large(m, primes);
      std::sort(primes.begin(), primes.end());
      for (u64 p : primes) {
        if (!f.factors.empty() && f.factors.back().prime == p) {
          ++f.factors.back().exponent;
        } else {
          f.factors.push_back({p, 1});
        }
      }
    }
  }
  return f;
}

std::optional<u64> mod_inverse(i64 a, u64 c) {
  if (c == 0) throw PreconditionError("mod_inverse: modulus must be >= 1");
  if (c == 1) return 1;
  const u64 ar = reduce_mod(a, c);
  // Extended Euclid on (ar, c) with signed 128-bit coefficients.
  i128 old_r = ar, r = c, old_s = 1, s = 0;
  while (r != 0) {
    const i128 q = old_r / r;
    i128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) return std::nullopt;
  i128 b = old_s % static_cast<i128>(c);
  if (b <= 0) b += c;
  return static_cast<u64>(b);
}

u64 divisor_count(const Factorization& f) {
  u64 t = 1;
  for (const auto& pp : f.factors) t *= static_cast<u64>(pp.exponent + 1);
  return t;
}

u64 divisor_count(u64 n) { return divisor_count(factorize(n)); }

int moebius(const Factorization& f) {
  for (const auto& pp : f.factors) {
    if (pp.exponent > 1) return 0;
  }
  return f.factors.size() % 2 == 0 ? 1 : -1;
}

int moebius(u64 n) { return moebius(factorize(n)); }

u64 euler_phi(const Factorization& f) {
  u64 phi = 1;
  for (const auto& pp : f.factors) {
    phi *= pp.prime - 1;
    for (int e = 1; e < pp.exponent; ++e) phi *= pp.prime;
  }
  return phi;
}

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> out{1};
  for (const auto& pp : f.factors) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (int e = 1; e <= pp.exponent; ++e) {
      pk *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TotientTable::TotientTable(u64 limit, u64 cap) : limit_(limit) {
  if (limit == 0) throw PreconditionError("totient_table: X must be >= 1");
  if (limit > cap) {
    throw CapacityError("totient_table: X = " + std::to_string(limit) + " exceeds cap " +
                        std::to_string(cap));
  }
  phi_.assign(limit + 1, 0);
  spf_.assign(limit + 1, 0);
  prefix_.assign(limit + 1, 0);
  std::vector<std::uint32_t> primes;
  phi_[1] = 1;
  spf_[1] = 1;
  for (u64 i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      phi_[i] = i - 1;
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      const u64 ip = i * p;
      if (p > spf_[i] || ip > limit) break;
      spf_[ip] = p;
      phi_[ip] = (p == spf_[i]) ? phi_[i] * p : phi_[i] * (p - 1);
    }
  }
  for (u64 y = 1; y <= limit; ++y) prefix_[y] = prefix_[y - 1] + phi_[y];
}

u64 totient_sum(u64 X) { return TotientTable(X).prefix(X); }

}  // namespace modinv::arith
