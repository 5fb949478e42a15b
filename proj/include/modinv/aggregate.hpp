#pragma once

#include <span>
#include <string>
#include <vector>

#include "modinv/common.hpp"

namespace modinv::aggregate {

/// Signed frequency pair (m, n).
struct IntPair {
  i64 m = 0;
  i64 n = 0;
  friend bool operator==(const IntPair&, const IntPair&) = default;
};

enum class Backend {
  direct,  // per-modulus inverse + cosine tables, inner loop over the pair grid
  dft,     // for each n, one length-c DFT of a -> e(n a'/c) yields every m at once
};

enum class Weight { unit, inverse_c };

struct Options {
  Backend backend = Backend::direct;
  u64 term_budget = 1'000'000'000;  // cap on sum_c phi(c) * (number of pairs)
};

/// Moduli are processed in fixed blocks of this many consecutive c; block
/// partials are combined in ascending block order, so results do not depend
/// on the thread count.
inline constexpr u64 kModulusBlock = 32;

/// For every pair, sum_{c_lo <= c <= c_hi} w(c) S(m, n; c).
std::vector<double> batched_sums(std::span<const IntPair> pairs, u64 c_lo, u64 c_hi,
                                 Weight weight = Weight::unit, const Options& options = {});

/// Partial sums T(m, n; y) = sum_{c <= y} S(m, n; c) for y = 1..X.
struct CompleteSumSeries {
  i64 m = 0;
  i64 n = 0;
  u64 X = 0;
  std::vector<double> terms;    // terms[y - 1] = S(m, n; y)
  std::vector<double> partial;  // partial[y - 1] = T(m, n; y)

  [[nodiscard]] double at(u64 y) const { return partial.at(y - 1); }
  [[nodiscard]] double final_value() const { return partial.back(); }
};

CompleteSumSeries complete_sum_series(i64 m, i64 n, u64 X, const Options& options = {});

struct GridEntry {
  i64 m = 0;
  i64 n = 0;
  double abs_sum = 0.0;  // |T(m, n; X)|
};

/// The triple sum over M <= |m| < 2M, N <= |n| < 2N of |T(m, n; X)|.
struct SumGrid {
  u64 M = 0;
  u64 N = 0;
  u64 X = 0;
  std::vector<GridEntry> entries;
  double total = 0.0;
};

/// The 4MN signed pairs in the order used by triple_sum: m ascending, then n ascending.
std::vector<IntPair> signed_grid(u64 M, u64 N);

SumGrid triple_sum(u64 M, u64 N, u64 X, const Options& options = {});

struct MomentResult {
  u64 N = 0;
  u64 X = 0;
  double value = 0.0;       // sum_{N <= |n| < 2N} T(n, 1; X)^2
  double normalized = 0.0;  // sum_{+-} sum_{N <= n < 2N} |sum_{X <= c < 2X} S(n, +-1; c) / c|^2
};

MomentResult second_moment(u64 N, u64 X, const Options& options = {});

enum class RatioKind { triple, moment2, linnik };

const char* to_string(RatioKind kind);

struct RatioQuery {
  RatioKind kind = RatioKind::triple;
  u64 M = 1;
  u64 N = 1;
  u64 X = 1;
};

struct RatioRow {
  RatioQuery query;
  double measured = 0.0;
  double envelope = 0.0;
  double ratio = 0.0;
};

/// MNX + (MN)^{2/3} X^{7/6}
double triple_envelope(u64 M, u64 N, u64 X);
/// N X^2 + N^{1/3} X^{7/3}
double moment2_envelope(u64 N, u64 X);

/// triple:  measured = triple_sum(M, N, X).total
/// moment2: measured = second_moment(N, X).value (M is ignored)
/// linnik:  measured = |T(M, N; X)|, envelope X
std::vector<RatioRow> bound_ratio_report(std::span<const RatioQuery> grid,
                                         const Options& options = {});

/// CSV with header `M,N,X,kind,measured,envelope,ratio`, 17 significant digits.
std::string ratio_csv(std::span<const RatioRow> rows);

}  // namespace modinv::aggregate
