#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "modinv/aggregate.hpp"
#include "modinv/common.hpp"
#include "modinv/geometry.hpp"
#include "modinv/pointset.hpp"

namespace modinv::discrepancy {

/// Exact point (xn / den, yn / den) of [0,1)^2, den < 2^41.
struct SamplePoint {
  u64 xn = 0;
  u64 yn = 0;
  u64 den = 1;
  friend bool operator==(const SamplePoint&, const SamplePoint&) = default;
};

/// A finite multiset of exact rational points on the torus. Every discrepancy
/// operation takes one of these.
class Sample {
 public:
  Sample() = default;
  /// Throws PreconditionError for an empty set or coordinates outside [0,1).
  explicit Sample(std::vector<SamplePoint> points);

  /// Torus-reduced S(X): (a mod c)/c, (b mod c)/c. Weyl sums are then taken
  /// from complete Kloosterman sums.
  static Sample from_pointset(const pointset::PointSet& ps);

  [[nodiscard]] std::size_t size() const { return points_.size(); }
  [[nodiscard]] std::span<const SamplePoint> points() const { return points_; }
  [[nodiscard]] double x(std::size_t i) const { return xs_[i]; }
  [[nodiscard]] double y(std::size_t i) const { return ys_[i]; }
  /// X when this sample is S(X).
  [[nodiscard]] std::optional<u64> modulus_bound() const { return modulus_bound_; }

  /// Sum over points of e(m1 x + m2 y).
  [[nodiscard]] std::vector<std::complex<double>> weyl_sums(
      std::span<const aggregate::IntPair> freqs) const;

  /// Closed toroidal box; a coordinate t in [0,1) is in [s, e] when s <= t <= e
  /// or t <= e - 1.
  [[nodiscard]] u64 count_in_box(const geometry::Box& box) const;
  /// Closed toroidal disc.
  [[nodiscard]] u64 count_in_disc(const geometry::Disc& disc) const;

 private:
  std::vector<SamplePoint> points_;
  std::vector<double> xs_;
  std::vector<double> ys_;
  std::optional<u64> modulus_bound_;
};

/// n i.i.d. uniform points on the 2^-32 grid from a seeded mt19937_64.
Sample random_baseline(u64 n, u64 seed);

/// Subset of a sample by index.
Sample subset(const Sample& sample, std::span<const std::size_t> indices);

}  // namespace modinv::discrepancy
