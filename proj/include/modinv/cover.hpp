#pragma once

#include <vector>

#include "modinv/common.hpp"
#include "modinv/geometry.hpp"
#include "modinv/sample.hpp"

namespace modinv::discrepancy {

/// Grid offsets as numerators over 2^40 (defaults: 40-bit truncations of
/// frac(sqrt 2) and frac(sqrt 3)).
struct CoverOffsets {
  i64 x = 455432628211;
  i64 y = 804898375044;
};

/// Squares u_begin <= u < u_end of row v at one level. The square (u, v) at
/// level i is [ox + u s, ox + (u + 1) s) x [oy + v s, oy + (v + 1) s) with
/// s = 2^-i, coordinates in units of 2^-40.
struct SquareRun {
  int level = 1;
  i64 v = 0;
  i64 u_begin = 0;
  i64 u_end = 0;
  [[nodiscard]] i64 size() const { return u_end - u_begin; }
};

struct DyadicCover {
  int depth = 0;
  CoverOffsets offsets;
  std::vector<std::vector<SquareRun>> families;  // families[i - 1] holds level i

  [[nodiscard]] static i64 side(int level) { return i64{1} << (geometry::kCoverBits - level); }
  [[nodiscard]] i64 x0(int level, i64 u) const { return offsets.x + u * side(level); }
  [[nodiscard]] i64 y0(int level, i64 v) const { return offsets.y + v * side(level); }
  [[nodiscard]] u64 family_size(int level) const;
  [[nodiscard]] double family_measure(int level) const;
  [[nodiscard]] double covered_measure() const;
};

struct CoverLimits {
  u64 max_rows = u64{1} << 24;  // square rows examined over all levels
};

/// Level 1 holds every level-1 square inside the region; level i holds the
/// level-i squares inside the region that are not inside a level-(i-1) one.
/// Requires 1 <= depth <= 30 and offsets in [0, 2^40); throws CapacityError
/// when the row count exceeds the limit.
DyadicCover dyadic_cover(const geometry::Region& region, int depth, CoverOffsets offsets = {},
                         const CoverLimits& limits = {});

/// Points of the sample lying in some cover square (half-open squares).
u64 cover_count(const Sample& sample, const DyadicCover& cover);

/// Exact closed membership count.
u64 count_in_region(const Sample& sample, const geometry::Region& region);

struct ConvexCount {
  u64 exact = 0;
  u64 cover_bound = 0;
  double area = 0.0;
  double cover_measure = 0.0;
  int depth = 0;
};

ConvexCount convex_count(const Sample& sample, const geometry::ConvexPolygon& region, int depth = 10,
                         CoverOffsets offsets = {});

}  // namespace modinv::discrepancy
