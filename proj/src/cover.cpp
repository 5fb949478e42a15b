#include "modinv/cover.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

namespace modinv::discrepancy {

namespace {

constexpr i64 kScale = i64{1} << geometry::kCoverBits;

i64 floor_div(i64 a, i64 b) {
  const i64 q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

struct RowRange {
  i64 lo = 0;
  i64 hi = -1;  // inclusive; empty when hi < lo
  [[nodiscard]] bool empty() const { return hi < lo; }
};

struct Level {
  i64 v_min = 0;
  std::vector<RowRange> rows;
  [[nodiscard]] RowRange at(i64 v) const {
    if (v < v_min || v >= v_min + static_cast<i64>(rows.size())) return {};
    return rows[static_cast<std::size_t>(v - v_min)];
  }
};

// Maximal u-range of level squares in row v inside the region.
RowRange row_range(const geometry::Region& region, const DyadicCover& cover, int level, i64 v) {
  const i64 s = DyadicCover::side(level);
  const i64 y0 = cover.y0(level, v);
  const auto inside = [&](i64 u) {
    return geometry::contains_square(region, cover.x0(level, u), y0, s);
  };
  const double fy0 = std::ldexp(static_cast<double>(y0), -geometry::kCoverBits);
  const double fy1 = std::ldexp(static_cast<double>(y0 + s), -geometry::kCoverBits);
  const auto c0 = geometry::chord(region, fy0);
  const auto c1 = geometry::chord(region, fy1);
  if (!c0 || !c1) return {};
  const double left = std::max(c0->first, c1->first);
  const double right = std::min(c0->second, c1->second);
  const double ox = static_cast<double>(cover.offsets.x);
  const double sd = static_cast<double>(s);
  i64 a = static_cast<i64>(std::ceil((std::ldexp(left, geometry::kCoverBits) - ox) / sd));
  i64 b = static_cast<i64>(std::floor((std::ldexp(right, geometry::kCoverBits) - ox) / sd)) - 1;
  if (b < a - 2) return {};
  while (a <= b && !inside(a)) ++a;
  while (b >= a && !inside(b)) --b;
  if (a > b) {
    std::optional<i64> found;
    for (i64 u = b - 1; u <= a + 1 && !found; ++u) {
      if (inside(u)) found = u;
    }
    if (!found) return {};
    a = b = *found;
  }
  while (inside(a - 1)) --a;
  while (inside(b + 1)) ++b;
  return {a, b};
}

// Level-i square containing the point, half-open.
std::pair<i64, i64> cell_of(const SamplePoint& p, const DyadicCover& cover, int level) {
  const i128 s = DyadicCover::side(level);
  const i128 den = p.den;
  const auto coord = [&](u64 num, i64 off) {
    const i128 t = (static_cast<i128>(num) << geometry::kCoverBits) - static_cast<i128>(off) * den;
    const i128 d = s * den;
    i128 q = t / d;
    if (t % d != 0 && t < 0) --q;
    return static_cast<i64>(q);
  };
  return {coord(p.xn, cover.offsets.x), coord(p.yn, cover.offsets.y)};
}

}  // namespace

u64 DyadicCover::family_size(int level) const {
  u64 total = 0;
  for (const auto& r : families.at(static_cast<std::size_t>(level - 1))) {
    total += static_cast<u64>(r.size());
  }
  return total;
}

double DyadicCover::family_measure(int level) const {
  return std::ldexp(static_cast<double>(family_size(level)), -2 * level);
}

double DyadicCover::covered_measure() const {
  KahanSum acc;
  for (int i = 1; i <= depth; ++i) acc.add(family_measure(i));
  return acc.value();
}

DyadicCover dyadic_cover(const geometry::Region& region, int depth, CoverOffsets offsets,
                         const CoverLimits& limits) {
  if (depth < 1 || depth > 30) throw PreconditionError("dyadic_cover: depth must be in [1, 30]");
  if (offsets.x < 0 || offsets.x >= kScale || offsets.y < 0 || offsets.y >= kScale) {
    throw PreconditionError("dyadic_cover: offsets must lie in [0, 2^40)");
  }
  DyadicCover cover;
  cover.depth = depth;
  cover.offsets = offsets;
  cover.families.resize(static_cast<std::size_t>(depth));

  const auto [y_lo, y_hi] = geometry::vertical_extent(region);
  const double oy = static_cast<double>(offsets.y);
  u64 rows_seen = 0;
  Level parent;
  for (int level = 1; level <= depth; ++level) {
    const i64 s = DyadicCover::side(level);
    const double sd = static_cast<double>(s);
    const i64 v_begin =
        static_cast<i64>(std::floor((std::ldexp(y_lo, geometry::kCoverBits) - oy) / sd)) - 1;
    const i64 v_end =
        static_cast<i64>(std::ceil((std::ldexp(y_hi, geometry::kCoverBits) - oy) / sd)) + 1;
    rows_seen += static_cast<u64>(std::max<i64>(0, v_end - v_begin + 1));
    if (rows_seen > limits.max_rows) {
      throw CapacityError("dyadic_cover: depth " + std::to_string(depth) +
                          " exceeds the row limit " + std::to_string(limits.max_rows));
    }
    Level current;
    current.v_min = v_begin;
    current.rows.resize(static_cast<std::size_t>(v_end - v_begin + 1));
    std::vector<RowRange>& rows = current.rows;
#pragma omp parallel for schedule(dynamic, 64)
    for (i64 v = v_begin; v <= v_end; ++v) {
      rows[static_cast<std::size_t>(v - v_begin)] = row_range(region, cover, level, v);
    }
    auto& family = cover.families[static_cast<std::size_t>(level - 1)];
    for (i64 v = v_begin; v <= v_end; ++v) {
      const RowRange q = rows[static_cast<std::size_t>(v - v_begin)];
      if (q.empty()) continue;
      const RowRange p = level == 1 ? RowRange{} : parent.at(floor_div(v, 2));
      if (p.empty()) {
        family.push_back({level, v, q.lo, q.hi + 1});
        continue;
      }
      // Children of the parent range are inside the region, so they sit inside q.
      if (q.lo < 2 * p.lo) family.push_back({level, v, q.lo, 2 * p.lo});
      if (2 * p.hi + 2 <= q.hi) family.push_back({level, v, 2 * p.hi + 2, q.hi + 1});
    }
    parent = std::move(current);
  }
  return cover;
}

u64 cover_count(const Sample& sample, const DyadicCover& cover) {
  std::vector<std::vector<SquareRun>> by_level = cover.families;
  for (auto& runs : by_level) {
    std::sort(runs.begin(), runs.end(), [](const SquareRun& a, const SquareRun& b) {
      return a.v != b.v ? a.v < b.v : a.u_begin < b.u_begin;
    });
  }
  const auto pts = sample.points();
  u64 count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (int level = 1; level <= cover.depth; ++level) {
      const auto [u, v] = cell_of(pts[i], cover, level);
      const auto& runs = by_level[static_cast<std::size_t>(level - 1)];
      auto it = std::upper_bound(runs.begin(), runs.end(), std::pair{v, u},
                                 [](const std::pair<i64, i64>& key, const SquareRun& r) {
                                   return key.first != r.v ? key.first < r.v
                                                           : key.second < r.u_begin;
                                 });
      if (it == runs.begin()) continue;
      --it;
      if (it->v == v && u >= it->u_begin && u < it->u_end) {
        ++count;
        break;
      }
    }
  }
  return count;
}

u64 count_in_region(const Sample& sample, const geometry::Region& region) {
  const auto pts = sample.points();
  u64 count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const bool in = std::visit(
        [&](const auto& r) { return r.contains(pts[i].xn, pts[i].yn, pts[i].den); }, region);
    if (in) ++count;
  }
  return count;
}

ConvexCount convex_count(const Sample& sample, const geometry::ConvexPolygon& region, int depth,
                         CoverOffsets offsets) {
  const geometry::Region r = region;
  const auto cover = dyadic_cover(r, depth, offsets);
  ConvexCount out;
  out.exact = count_in_region(sample, r);
  out.cover_bound = cover_count(sample, cover);
  out.area = region.area();
  out.cover_measure = cover.covered_measure();
  out.depth = depth;
  return out;
}

}  // namespace modinv::discrepancy
