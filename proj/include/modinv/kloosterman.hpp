#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "modinv/common.hpp"

namespace modinv::kloosterman {

/// Parameters of S(m, n; c). m and n are unrestricted; c >= 1.
struct Query {
  i64 m = 0;
  i64 n = 0;
  u64 c = 1;
  friend bool operator==(const Query&, const Query&) = default;
};

enum class Method { direct, crt_split };

struct Value {
  double value = 0.0;
  Method method = Method::direct;
  u64 term_count = 0;  // phi(c)
};

struct Limits {
  u64 direct_cap = 10'000'000;
};

/// Reduced residues a in [1, c] paired with their inverses, ascending in a.
class InverseTable {
 public:
  struct Unit {
    std::uint32_t a;
    std::uint32_t inv;
  };

  explicit InverseTable(u64 c);

  [[nodiscard]] u64 modulus() const { return c_; }
  [[nodiscard]] std::span<const Unit> units() const { return units_; }

 private:
  u64 c_;
  std::vector<Unit> units_;
};

/// cos(2 pi k / c) for k in [0, c), with table[k] == table[c - k] bit for bit.
class CosineTable {
 public:
  explicit CosineTable(u64 c);
  [[nodiscard]] double operator[](u64 k) const { return values_[k]; }
  [[nodiscard]] u64 modulus() const { return values_.size(); }

 private:
  std::vector<double> values_;
};

/// cos(2 pi k / c) evaluated on min(k, c - k), so it is symmetric in k <-> c - k.
double unit_cos(u64 k, u64 c);
/// sin(2 pi k / c), antisymmetric in k <-> c - k.
double unit_sin(u64 k, u64 c);

/// Defining sum, ascending a, compensated. Throws CapacityError above limits.direct_cap.
Value direct(const Query& q, const Limits& limits = {});

/// Same sum using a shared table for q.c (q.c must equal table.modulus()).
Value direct(const Query& q, const InverseTable& table);

/// Hot-path kernel: S(m, n; c) from precomputed tables of the same modulus.
double direct_sum(i64 m, i64 n, const InverseTable& table, const CosineTable& cosines);

/// The defining sum accumulated as a complex number (real and imaginary
/// parts), used to check that the imaginary part cancels.
std::complex<double> direct_complex(const Query& q, const Limits& limits = {});

/// CRT splitting into prime-power moduli with the twisted multiplicativity
///   S(m, n; q r) = S(m r', n r'; q) S(m q', n q'; r),  r r' = 1 (q), q q' = 1 (r).
/// Prime powers (and c = 1) go straight to direct().
Value fast(const Query& q, const Limits& limits = {});

/// Ramanujan sum S(0, n; c) = sum_{d | (n, c)} mu(c / d) d, evaluated exactly.
double ramanujan(i64 n, u64 c);

/// gcd(m, n, c)^{1/2} c^{1/2} tau(c), with gcd(0, 0, c) = c.
double weil_bound(const Query& q);

/// Absolute tolerance 1e-9 * max(1, sqrt(c) tau(c)) used to compare evaluations.
double tolerance(u64 c);

struct SelbergTerm {
  u64 d;
  Query query;  // (m n / d^2, 1, c / d)
};

/// Expansion S(m, n; c) = sum_{d | (m, n, c)} d S(m n / d^2, 1; c / d), d ascending.
/// Requires m, n >= 1; throws PreconditionError otherwise, CapacityError if m n overflows.
std::vector<SelbergTerm> selberg_rewrite(const Query& q);

/// sum_d d * S(query_d), each term evaluated with fast().
double selberg_evaluate(std::span<const SelbergTerm> terms, const Limits& limits = {});

}  // namespace modinv::kloosterman
