#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "modinv/aggregate.hpp"
#include "modinv/common.hpp"
#include "modinv/geometry.hpp"

namespace modinv::pointset {

/// a b = 1 (mod c) with 1 <= a, b <= c. The point is (a/c, b/c); for c = 1
/// this is (1, 1), which is (0, 0) on the torus.
struct InversePair {
  std::uint32_t a = 1;
  std::uint32_t b = 1;
  std::uint32_t c = 1;
  friend bool operator==(const InversePair&, const InversePair&) = default;
};

struct Limits {
  u64 point_cap = 8'000'000;
};

/// S(X): all inverse pairs with c <= X, ordered by c, then a.
class PointSet {
 public:
  PointSet() = default;
  PointSet(u64 X, std::vector<InversePair> points);

  [[nodiscard]] u64 X() const { return X_; }
  [[nodiscard]] std::size_t size() const { return points_.size(); }
  [[nodiscard]] std::span<const InversePair> points() const { return points_; }
  /// Points with modulus c occupy [offset(c), offset(c + 1)).
  [[nodiscard]] std::size_t offset(u64 c) const { return offsets_.at(c - 1); }
  /// Point indices sorted by a/c. All first coordinates are distinct.
  [[nodiscard]] std::span<const std::uint32_t> order_by_x() const { return by_x_; }

 private:
  u64 X_ = 0;
  std::vector<InversePair> points_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> by_x_;
};

/// Throws CapacityError when N(X) exceeds the point cap, PreconditionError for X = 0.
PointSet generate(u64 X, const Limits& limits = {});

/// Sum over points of e(m1 a/c + m2 b/c).
std::complex<double> weyl_sum(const PointSet& ps, i64 m1, i64 m2);
std::vector<std::complex<double>> weyl_sums(const PointSet& ps,
                                            std::span<const aggregate::IntPair> freqs);

/// Closed box, sides wrapping mod 1. A coordinate t = a/c in (0, 1] is inside
/// [s, e] when s <= t <= e, or e >= 1 and t <= e - 1.
u64 count_in_box(const PointSet& ps, const geometry::Box& box);

/// Closed disc under the toroidal metric.
u64 count_in_disc(const PointSet& ps, const geometry::Disc& disc);

struct ClosestPair {
  double distance = 0.0;
  /// distance^2 = numerator / denominator exactly.
  u128 numerator = 0;
  u128 denominator = 1;
  InversePair first;
  InversePair second;
};

/// Exact minimum toroidal distance. Requires at least two points.
ClosestPair min_pairwise_distance(const PointSet& ps);

/// Points with (a/c)(b/c) < 1/X, in storage order.
std::vector<InversePair> hyperbola_points(const PointSet& ps);

/// CSV with header `a,b,c`.
void write_csv(std::ostream& out, const PointSet& ps);

/// Scatter plot: 1000x1000 viewbox, origin bottom-left, radius-0.5 dots.
void write_svg(std::ostream& out, const PointSet& ps);

}  // namespace modinv::pointset
