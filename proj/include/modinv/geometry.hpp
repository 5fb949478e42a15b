#pragma once

#include <optional>
#include <random>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "modinv/common.hpp"

namespace modinv::geometry {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Closed toroidal box [xi, xi + alpha] x [zeta, zeta + beta], sides taken mod 1.
struct Box {
  double xi = 0.0;
  double zeta = 0.0;
  double alpha = 0.0;
  double beta = 0.0;

  [[nodiscard]] double measure() const { return alpha * beta; }
  friend bool operator==(const Box&, const Box&) = default;
};

/// Throws PreconditionError unless 0 <= xi, zeta < 1 and 0 <= alpha, beta < 1.
void validate(const Box& box);

/// Closed disc under the toroidal Euclidean metric.
struct Disc {
  Point2 center;
  double radius = 0.0;
  friend bool operator==(const Disc&, const Disc&) = default;
};

/// Throws PreconditionError unless the center is in [0,1)^2 and 0 <= radius < 1/2.
void validate(const Disc& disc);

/// Squared toroidal distance between two points of [0,1)^2.
double torus_distance_squared(Point2 p, Point2 q);

/// Polygon vertices live on the grid 2^-kPolygonBits Z^2.
inline constexpr int kPolygonBits = 32;
/// Cover squares and offsets live on the grid 2^-kCoverBits Z^2.
inline constexpr int kCoverBits = 40;

struct GridPoint {
  i64 x = 0;
  i64 y = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// Strictly convex polygon inside [0,1]^2, vertices counterclockwise on the
/// 2^-32 grid. All membership tests are exact.
class ConvexPolygon {
 public:
  /// Snaps vertices to the grid (round to nearest) and validates. Clockwise
  /// input is reversed. Throws PreconditionError for fewer than 3 vertices,
  /// repeated or collinear vertices, non-convex or self-intersecting input, or
  /// vertices outside [0,1]^2.
  static ConvexPolygon from_points(std::span<const Point2> vertices);
  static ConvexPolygon from_grid(std::vector<GridPoint> vertices);

  [[nodiscard]] const std::vector<GridPoint>& grid_vertices() const { return vertices_; }
  [[nodiscard]] std::vector<Point2> vertices() const;
  [[nodiscard]] double area() const;
  [[nodiscard]] double perimeter() const;

  /// Closed membership of (xn / den, yn / den); den <= 2^41, numerators <= 2 den.
  [[nodiscard]] bool contains(u64 xn, u64 yn, u64 den) const;

  /// Bounding box in grid units.
  [[nodiscard]] GridPoint lower() const { return lower_; }
  [[nodiscard]] GridPoint upper() const { return upper_; }

  /// Horizontal extent [left, right] of the polygon at height y, or nothing.
  [[nodiscard]] std::optional<std::pair<double, double>> chord(double y) const;

 private:
  explicit ConvexPolygon(std::vector<GridPoint> vertices);
  std::vector<GridPoint> vertices_;
  GridPoint lower_;
  GridPoint upper_;
};

/// Random strictly convex polygon: hull of `samples` uniform points in
/// [margin, 1 - margin]^2, retried until it has at least 3 vertices.
ConvexPolygon random_convex_polygon(std::mt19937_64& rng, int samples = 12, double margin = 0.0);

/// {(x, y) in [0,1]^2 : x y >= 1/X}, handled exactly.
struct HyperbolaRegion {
  u64 X = 1;

  /// 1 - (1 + ln X) / X
  [[nodiscard]] double area() const;
  /// Closed membership of (xn / den, yn / den).
  [[nodiscard]] bool contains(u64 xn, u64 yn, u64 den) const;
};

using Region = std::variant<ConvexPolygon, HyperbolaRegion>;

double area(const Region& region);

/// Whether the closed square [x0, x0 + side] x [y0, y0 + side] (2^-40 units)
/// lies inside the region.
bool contains_square(const Region& region, i64 x0, i64 y0, i64 side);

/// Vertical extent of the region in [0,1].
std::pair<double, double> vertical_extent(const Region& region);

/// Horizontal extent of the region at height y, or nothing.
std::optional<std::pair<double, double>> chord(const Region& region, double y);

}  // namespace modinv::geometry
