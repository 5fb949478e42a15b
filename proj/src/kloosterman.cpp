#include "modinv/kloosterman.hpp"

#include <cmath>
#include <string>

#include "modinv/arith.hpp"

namespace modinv::kloosterman {

namespace {

void check_modulus(u64 c, const Limits& limits) {
  if (c == 0) throw PreconditionError("kloosterman: modulus must be >= 1");
  if (c > limits.direct_cap) {
    throw CapacityError("kloosterman: c = " + std::to_string(c) +
                        " exceeds direct-evaluation cap " + std::to_string(limits.direct_cap));
  }
}

// (m a + n inv) mod c with m, n already reduced into [0, c).
inline u64 phase_index(u64 mr, u64 nr, u64 a, u64 inv, u64 c) {
  return (mulmod(mr, a, c) + mulmod(nr, inv, c)) % c;
}

// Evaluates S(m, n; p^e) for each prime-power factor and multiplies.
double crt_product(i64 m, i64 n, std::span<const arith::PrimePower> factors, u64 c,
                   const Limits& limits) {
  if (factors.size() == 1) return direct({m, n, c}, limits).value;
  u64 q = 1;
  for (int e = 0; e < factors.front().exponent; ++e) q *= factors.front().prime;
  const u64 r = c / q;
  const u64 r_inv = *arith::mod_inverse(static_cast<i64>(r % q), q);
  const u64 q_inv = *arith::mod_inverse(static_cast<i64>(q % r), r);
  const i64 mq = static_cast<i64>(mulmod(reduce_mod(m, q), r_inv, q));
  const i64 nq = static_cast<i64>(mulmod(reduce_mod(n, q), r_inv, q));
  const i64 mr = static_cast<i64>(mulmod(reduce_mod(m, r), q_inv, r));
  const i64 nr = static_cast<i64>(mulmod(reduce_mod(n, r), q_inv, r));
  const double left = direct({mq, nq, q}, limits).value;
  return left * crt_product(mr, nr, factors.subspan(1), r, limits);
}

}  // namespace

InverseTable::InverseTable(u64 c) : c_(c) {
  if (c == 0) throw PreconditionError("InverseTable: modulus must be >= 1");
  if (c > UINT32_MAX) throw CapacityError("InverseTable: modulus exceeds 32 bits");
  if (c == 1) {
    units_.push_back({1, 1});
    return;
  }
  units_.reserve(c);
  for (u64 a = 1; a < c; ++a) {
    if (arith::gcd(a, c) != 1) continue;
    const u64 inv = *arith::mod_inverse(static_cast<i64>(a), c);
    units_.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(inv)});
  }
}

namespace {

// cos(pi j / c) for 0 <= j <= c, reduced to an angle in [0, pi/4] and
// evaluated in long double.
double cos_pi_ratio(u64 j, u64 c) {
  constexpr long double kPi = 3.141592653589793238462643383279502884L;
  const bool negate = 2 * j > c;
  if (negate) j = c - j;
  long double v;
  if (4 * j > c) {
    v = std::sin(kPi * static_cast<long double>(c - 2 * j) / static_cast<long double>(2 * c));
  } else {
    v = std::cos(kPi * static_cast<long double>(j) / static_cast<long double>(c));
  }
  return static_cast<double>(negate ? -v : v);
}

// sin(pi j / c) for 0 <= j <= c, reduced the same way.
double sin_pi_ratio(u64 j, u64 c) {
  constexpr long double kPi = 3.141592653589793238462643383279502884L;
  if (2 * j > c) j = c - j;
  long double v;
  if (4 * j > c) {
    v = std::cos(kPi * static_cast<long double>(c - 2 * j) / static_cast<long double>(2 * c));
  } else {
    v = std::sin(kPi * static_cast<long double>(j) / static_cast<long double>(c));
  }
  return static_cast<double>(v);
}

}  // namespace

double unit_cos(u64 k, u64 c) {
  k %= c;
  const u64 kk = (2 * k > c) ? c - k : k;
  return cos_pi_ratio(2 * kk, c);
}

double unit_sin(u64 k, u64 c) {
  k %= c;
  if (2 * k > c) return -unit_sin(c - k, c);
  return sin_pi_ratio(2 * k, c);
}

CosineTable::CosineTable(u64 c) : values_(c) {
  for (u64 k = 0; 2 * k <= c; ++k) {
    values_[k] = unit_cos(k, c);
    if (k != 0) values_[c - k] = values_[k];
  }
}

double direct_sum(i64 m, i64 n, const InverseTable& table, const CosineTable& cosines) {
  const u64 c = table.modulus();
  const u64 mr = reduce_mod(m, c);
  const u64 nr = reduce_mod(n, c);
  KahanSum acc;
  if (c < (u64{1} << 31)) {
    for (const auto& u : table.units()) {
      acc.add(cosines[(mr * u.a + nr * u.inv) % c]);
    }
  } else {
    for (const auto& u : table.units()) acc.add(cosines[phase_index(mr, nr, u.a, u.inv, c)]);
  }
  return acc.value();
}

Value direct(const Query& q, const InverseTable& table) {
  const u64 c = table.modulus();
  if (q.c != c) throw PreconditionError("kloosterman::direct: table modulus mismatch");
  const u64 mr = reduce_mod(q.m, c);
  const u64 nr = reduce_mod(q.n, c);
  KahanSum acc;
  for (const auto& u : table.units()) acc.add(unit_cos(phase_index(mr, nr, u.a, u.inv, c), c));
  return {acc.value(), Method::direct, table.units().size()};
}

Value direct(const Query& q, const Limits& limits) {
  check_modulus(q.c, limits);
  return direct(q, InverseTable(q.c));
}

std::complex<double> direct_complex(const Query& q, const Limits& limits) {
  check_modulus(q.c, limits);
  const InverseTable table(q.c);
  const u64 c = q.c;
  const u64 mr = reduce_mod(q.m, c);
  const u64 nr = reduce_mod(q.n, c);
  KahanSum re, im;
  for (const auto& u : table.units()) {
    const u64 k = phase_index(mr, nr, u.a, u.inv, c);
    re.add(unit_cos(k, c));
    im.add(unit_sin(k, c));
  }
  return {re.value(), im.value()};
}

Value fast(const Query& q, const Limits& limits) {
  check_modulus(q.c, limits);
  const auto f = arith::factorize(q.c);
  if (f.factors.size() <= 1) return direct(q, limits);
  return {crt_product(q.m, q.n, f.factors, q.c, limits), Method::crt_split, arith::euler_phi(f)};
}

double ramanujan(i64 n, u64 c) {
  if (c == 0) throw PreconditionError("ramanujan: modulus must be >= 1");
  const u64 g = arith::gcd3(n, 0, static_cast<i64>(c));
  i64 total = 0;
  for (u64 d : arith::divisors(arith::factorize(g))) {
    total += arith::moebius(c / d) * static_cast<i64>(d);
  }
  return static_cast<double>(total);
}

double weil_bound(const Query& q) {
  if (q.c == 0) throw PreconditionError("weil_bound: modulus must be >= 1");
  const u64 g = arith::gcd3(q.m, q.n, static_cast<i64>(q.c));
  const double tau = static_cast<double>(arith::divisor_count(q.c));
  return std::sqrt(static_cast<double>(g)) * std::sqrt(static_cast<double>(q.c)) * tau;
}

double tolerance(u64 c) {
  const double scale = std::sqrt(static_cast<double>(c)) *
                       static_cast<double>(arith::divisor_count(c));
  return 1e-9 * std::max(1.0, scale);
}

std::vector<SelbergTerm> selberg_rewrite(const Query& q) {
  if (q.m <= 0 || q.n <= 0) {
    throw PreconditionError("selberg_rewrite: requires m >= 1 and n >= 1");
  }
  if (q.c == 0) throw PreconditionError("selberg_rewrite: modulus must be >= 1");
  const i128 mn = static_cast<i128>(q.m) * q.n;
  if (mn > static_cast<i128>(INT64_MAX)) throw CapacityError("selberg_rewrite: m*n overflows");
  const u64 g = arith::gcd3(q.m, q.n, static_cast<i64>(q.c));
  std::vector<SelbergTerm> terms;
  for (u64 d : arith::divisors(arith::factorize(g))) {
    const i64 coeff = static_cast<i64>(mn / (static_cast<i128>(d) * d));
    terms.push_back({d, {coeff, 1, q.c / d}});
  }
  return terms;
}

double selberg_evaluate(std::span<const SelbergTerm> terms, const Limits& limits) {
  KahanSum acc;
  for (const auto& t : terms) acc.add(static_cast<double>(t.d) * fast(t.query, limits).value);
  return acc.value();
}

}  // namespace modinv::kloosterman
