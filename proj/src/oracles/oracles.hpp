#pragma once

// Brute-force reference computations used only by tests and the acceptance
// runner. Nothing here calls into the library kernels.

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace modinv::oracle {

using i64 = std::int64_t;
using u64 = std::uint64_t;

u64 gcd(u64 a, u64 b);
/// Smallest b in [1, c] with a b = 1 (mod c), or 0.
u64 inverse_by_search(i64 a, u64 c);
u64 phi(u64 n);
u64 tau(u64 n);
u64 totient_prefix(u64 X);

/// Sum over units a of cos(2 pi (m a + n a') / c), long double accumulation.
double kloosterman(i64 m, i64 n, u64 c);

/// sum_{N <= |n| < 2N} (sum_{c <= X} S(n, 1; c))^2
double second_moment(u64 N, u64 X);
/// sum_{N <= n < 2N} sum_{+-} (sum_{X <= c < 2X} S(n, +-1; c) / c)^2
double second_moment_normalized(u64 N, u64 X);

struct Triple {
  u64 a, b, c;
  bool operator<(const Triple& o) const;
  bool operator==(const Triple& o) const = default;
};

/// All (a, b, c) with c <= X, 1 <= a, b <= c, a b = 1 (mod c), by double loop.
std::vector<Triple> inverse_pairs(u64 X);

/// Points with a b X < c^2.
std::vector<Triple> hyperbola_filter(const std::vector<Triple>& pts, u64 X);

/// t = a/c in (0,1] inside the closed circle arc [s, e], e < 2 (long double).
bool in_closed_arc(u64 a, u64 c, double s, double e);

/// Points of (0,1]^2 representatives in the closed toroidal box.
u64 box_count(const std::vector<Triple>& pts, double xi, double zeta, double alpha, double beta);

/// Minimum squared toroidal distance over all pairs (long double).
long double min_distance_squared(const std::vector<Triple>& pts);

struct FracPoint {
  u64 xn, yn, den;  // coordinates in [0,1)
};

struct BoxOracle {
  double value = 0.0;
  u64 count = 0;
};

/// Sup over boxes with sides at point coordinates, each side closed or open,
/// of |count/n - measure|. Requires at most 64 points.
BoxOracle box_discrepancy(const std::vector<FracPoint>& pts);

struct Frac {
  u64 num, den;
};

/// |count/n - measure| for the box with sides [xlo, xhi] x [ylo, yhi] taken
/// cyclically (open: (xlo, xhi) x (ylo, yhi), equal ends meaning all but one value).
double box_value(const std::vector<FracPoint>& pts, Frac xlo, Frac xhi, Frac ylo, Frac yhi,
                 bool open, u64* count = nullptr);

struct GridVertex {
  i64 x, y;  // units of 2^-32
};

/// Closed membership of (xn/den, yn/den) in the counterclockwise convex polygon.
bool polygon_contains(const std::vector<GridVertex>& poly, u64 xn, u64 yn, u64 den);

/// Cover families by definition: level-i squares (units 2^-40 with the given
/// offsets) inside the polygon, minus those inside an accepted level-(i-1)
/// square. Enumerates every square of each level; small depths only.
std::vector<std::set<std::pair<i64, i64>>> cover_families(const std::vector<GridVertex>& poly,
                                                           i64 off_x, i64 off_y, int depth);

}  // namespace modinv::oracle
