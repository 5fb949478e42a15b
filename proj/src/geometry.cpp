#include "modinv/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "modinv/exact.hpp"

namespace modinv::geometry {

namespace {

constexpr i64 kPolygonScale = i64{1} << kPolygonBits;
constexpr i64 kCoverScale = i64{1} << kCoverBits;

i128 cross(const GridPoint& o, const GridPoint& a, const GridPoint& b) {
  return static_cast<i128>(a.x - o.x) * (b.y - o.y) - static_cast<i128>(a.y - o.y) * (b.x - o.x);
}

// Counterclockwise strict hull (no collinear points), starting at the
// lexicographically smallest point.
std::vector<GridPoint> strict_hull(std::vector<GridPoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const GridPoint& a, const GridPoint& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<GridPoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

i64 snap(double v) {
  if (!std::isfinite(v)) throw PreconditionError("ConvexPolygon: non-finite vertex");
  return static_cast<i64>(std::llround(std::ldexp(v, kPolygonBits)));
}

}  // namespace

void validate(const Box& box) {
  const auto unit = [](double v) { return v >= 0.0 && v < 1.0; };
  if (!unit(box.xi) || !unit(box.zeta)) throw PreconditionError("Box: corner must lie in [0,1)^2");
  if (!unit(box.alpha) || !unit(box.beta)) throw PreconditionError("Box: sides must lie in [0,1)");
}

void validate(const Disc& disc) {
  const auto unit = [](double v) { return v >= 0.0 && v < 1.0; };
  if (!unit(disc.center.x) || !unit(disc.center.y)) {
    throw PreconditionError("Disc: center must lie in [0,1)^2");
  }
  if (!(disc.radius >= 0.0 && disc.radius < 0.5)) {
    throw PreconditionError("Disc: radius must lie in [0, 1/2)");
  }
}

double torus_distance_squared(Point2 p, Point2 q) {
  double dx = std::fabs(p.x - q.x);
  double dy = std::fabs(p.y - q.y);
  dx = std::min(dx, 1.0 - dx);
  dy = std::min(dy, 1.0 - dy);
  return dx * dx + dy * dy;
}

ConvexPolygon::ConvexPolygon(std::vector<GridPoint> vertices) : vertices_(std::move(vertices)) {
  lower_ = upper_ = vertices_.front();
  for (const auto& v : vertices_) {
    lower_ = {std::min(lower_.x, v.x), std::min(lower_.y, v.y)};
    upper_ = {std::max(upper_.x, v.x), std::max(upper_.y, v.y)};
  }
}

ConvexPolygon ConvexPolygon::from_points(std::span<const Point2> vertices) {
  std::vector<GridPoint> grid;
  grid.reserve(vertices.size());
  for (const auto& p : vertices) grid.push_back({snap(p.x), snap(p.y)});
  return from_grid(std::move(grid));
}

ConvexPolygon ConvexPolygon::from_grid(std::vector<GridPoint> vertices) {
  if (vertices.size() < 3) throw PreconditionError("ConvexPolygon: need at least 3 vertices");
  for (const auto& v : vertices) {
    if (v.x < 0 || v.y < 0 || v.x > kPolygonScale || v.y > kPolygonScale) {
      throw PreconditionError("ConvexPolygon: vertex outside [0,1]^2");
    }
  }
  i128 twice_area = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& p = vertices[i];
    const auto& q = vertices[(i + 1) % vertices.size()];
    twice_area += static_cast<i128>(p.x) * q.y - static_cast<i128>(q.x) * p.y;
  }
  if (twice_area < 0) std::reverse(vertices.begin(), vertices.end());

  const auto hull = strict_hull(vertices);
  if (hull.size() != vertices.size()) {
    throw PreconditionError("ConvexPolygon: vertices are not in strictly convex position");
  }
  const auto start = std::find(vertices.begin(), vertices.end(), hull.front());
  std::rotate(vertices.begin(), start, vertices.end());
  if (vertices != hull) throw PreconditionError("ConvexPolygon: vertices are not in convex order");
  return ConvexPolygon(std::move(vertices));
}

std::vector<Point2> ConvexPolygon::vertices() const {
  std::vector<Point2> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) {
    out.push_back({std::ldexp(static_cast<double>(v.x), -kPolygonBits),
                   std::ldexp(static_cast<double>(v.y), -kPolygonBits)});
  }
  return out;
}

double ConvexPolygon::area() const {
  i128 twice_area = 0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& p = vertices_[i];
    const auto& q = vertices_[(i + 1) % vertices_.size()];
    twice_area += static_cast<i128>(p.x) * q.y - static_cast<i128>(q.x) * p.y;
  }
  return std::ldexp(static_cast<double>(twice_area), -(2 * kPolygonBits + 1));
}

double ConvexPolygon::perimeter() const {
  const auto pts = vertices();
  double total = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& p = pts[i];
    const auto& q = pts[(i + 1) % pts.size()];
    total += std::hypot(q.x - p.x, q.y - p.y);
  }
  return total;
}

bool ConvexPolygon::contains(u64 xn, u64 yn, u64 den) const {
  const i128 px = static_cast<i128>(xn) << kPolygonBits;
  const i128 py = static_cast<i128>(yn) << kPolygonBits;
  const i128 d = den;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& a = vertices_[i];
    const auto& b = vertices_[(i + 1) % vertices_.size()];
    const i128 c = static_cast<i128>(b.x - a.x) * (py - a.y * d) -
                   static_cast<i128>(b.y - a.y) * (px - a.x * d);
    if (c < 0) return false;
  }
  return true;
}

std::optional<std::pair<double, double>> ConvexPolygon::chord(double y) const {
  const auto pts = vertices();
  double lo = INFINITY, hi = -INFINITY;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& p = pts[i];
    const auto& q = pts[(i + 1) % pts.size()];
    if (y < std::min(p.y, q.y) || y > std::max(p.y, q.y)) continue;
    if (p.y == q.y) {
      lo = std::min({lo, p.x, q.x});
      hi = std::max({hi, p.x, q.x});
    } else {
      const double x = p.x + (q.x - p.x) * ((y - p.y) / (q.y - p.y));
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  }
  if (lo > hi) return std::nullopt;
  return std::pair{lo, hi};
}

ConvexPolygon random_convex_polygon(std::mt19937_64& rng, int samples, double margin) {
  const i64 lo = snap(margin);
  const u64 span = static_cast<u64>(kPolygonScale - 2 * lo) + 1;
  for (;;) {
    std::vector<GridPoint> pts;
    for (int i = 0; i < std::max(samples, 3); ++i) {
      const i64 x = lo + static_cast<i64>(rng() % span);
      const i64 y = lo + static_cast<i64>(rng() % span);
      pts.push_back({x, y});
    }
    auto hull = strict_hull(std::move(pts));
    if (hull.size() >= 3) return ConvexPolygon::from_grid(std::move(hull));
  }
}

double HyperbolaRegion::area() const {
  const double x = static_cast<double>(X);
  return 1.0 - (1.0 + std::log(x)) / x;
}

bool HyperbolaRegion::contains(u64 xn, u64 yn, u64 den) const {
  if (xn > den || yn > den) return false;
  return static_cast<u128>(xn) * yn * X >= static_cast<u128>(den) * den;
}

double area(const Region& region) {
  return std::visit([](const auto& r) { return r.area(); }, region);
}

bool contains_square(const Region& region, i64 x0, i64 y0, i64 side) {
  if (x0 < 0 || y0 < 0) return false;
  const i64 x1 = x0 + side;
  const i64 y1 = y0 + side;
  if (x1 > kCoverScale || y1 > kCoverScale) return false;
  const u64 den = static_cast<u64>(kCoverScale);
  if (const auto* h = std::get_if<HyperbolaRegion>(&region)) {
    // x y is increasing in both coordinates: the lower-left corner is binding.
    return h->contains(static_cast<u64>(x0), static_cast<u64>(y0), den);
  }
  const auto& poly = std::get<ConvexPolygon>(region);
  for (i64 x : {x0, x1}) {
    for (i64 y : {y0, y1}) {
      if (!poly.contains(static_cast<u64>(x), static_cast<u64>(y), den)) return false;
    }
  }
  return true;
}

std::pair<double, double> vertical_extent(const Region& region) {
  if (const auto* h = std::get_if<HyperbolaRegion>(&region)) {
    return {1.0 / static_cast<double>(h->X), 1.0};
  }
  const auto& poly = std::get<ConvexPolygon>(region);
  return {std::ldexp(static_cast<double>(poly.lower().y), -kPolygonBits),
          std::ldexp(static_cast<double>(poly.upper().y), -kPolygonBits)};
}

std::optional<std::pair<double, double>> chord(const Region& region, double y) {
  if (const auto* h = std::get_if<HyperbolaRegion>(&region)) {
    const double x_min = 1.0 / (static_cast<double>(h->X) * y);
    if (y > 1.0 || x_min > 1.0) return std::nullopt;
    return std::pair{x_min, 1.0};
  }
  return std::get<ConvexPolygon>(region).chord(y);
}

}  // namespace modinv::geometry
