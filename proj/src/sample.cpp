#include "modinv/sample.hpp"

#include <cmath>
#include <random>

#include "modinv/exact.hpp"
#include "modinv/kloosterman.hpp"

namespace modinv::discrepancy {

namespace {

bool in_arc(u64 num, u64 den, double s, double e) {
  if (exact::fraction_in_closed(num, den, s, e)) return true;
  return e >= 1.0 && exact::compare_fraction_double(num, den, e - 1.0) <= 0;
}

u64 phase(i64 m, u64 num, u64 den) {
  return static_cast<u64>((static_cast<u128>(reduce_mod(m, den)) * num) % den);
}

}  // namespace

Sample::Sample(std::vector<SamplePoint> points) : points_(std::move(points)) {
  if (points_.empty()) throw PreconditionError("Sample: need at least one point");
  xs_.reserve(points_.size());
  ys_.reserve(points_.size());
  for (const auto& p : points_) {
    if (p.den == 0 || p.den > (u64{1} << 41) || p.xn >= p.den || p.yn >= p.den) {
      throw PreconditionError("Sample: coordinates must be fractions in [0,1)");
    }
    xs_.push_back(static_cast<double>(p.xn) / static_cast<double>(p.den));
    ys_.push_back(static_cast<double>(p.yn) / static_cast<double>(p.den));
  }
}

Sample Sample::from_pointset(const pointset::PointSet& ps) {
  std::vector<SamplePoint> pts;
  pts.reserve(ps.size());
  for (const auto& p : ps.points()) pts.push_back({p.a % p.c, p.b % p.c, p.c});
  Sample s(std::move(pts));
  s.modulus_bound_ = ps.X();
  return s;
}

std::vector<std::complex<double>> Sample::weyl_sums(
    std::span<const aggregate::IntPair> freqs) const {
  std::vector<std::complex<double>> out(freqs.size());
  if (modulus_bound_) {
    // Over S(X) the Weyl sum is the complete sum of S(m1, m2; c), which is real.
    const auto sums = aggregate::batched_sums(freqs, 1, *modulus_bound_);
    for (std::size_t f = 0; f < freqs.size(); ++f) out[f] = sums[f];
    return out;
  }
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t f = 0; f < freqs.size(); ++f) {
    KahanSum re, im;
    for (const auto& p : points_) {
      const u64 k = (phase(freqs[f].m, p.xn, p.den) + phase(freqs[f].n, p.yn, p.den)) % p.den;
      re.add(kloosterman::unit_cos(k, p.den));
      im.add(kloosterman::unit_sin(k, p.den));
    }
    out[f] = {re.value(), im.value()};
  }
  return out;
}

u64 Sample::count_in_box(const geometry::Box& box) const {
  geometry::validate(box);
  const double x_end = box.xi + box.alpha;
  const double y_end = box.zeta + box.beta;
  u64 count = 0;
  for (const auto& p : points_) {
    if (in_arc(p.xn, p.den, box.xi, x_end) && in_arc(p.yn, p.den, box.zeta, y_end)) ++count;
  }
  return count;
}

u64 Sample::count_in_disc(const geometry::Disc& disc) const {
  geometry::validate(disc);
  const double r2 = disc.radius * disc.radius;
  u64 count = 0;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (geometry::torus_distance_squared({xs_[i], ys_[i]}, disc.center) <= r2) ++count;
  }
  return count;
}

Sample random_baseline(u64 n, u64 seed) {
  if (n == 0) throw PreconditionError("random_baseline: n must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<SamplePoint> pts;
  pts.reserve(n);
  for (u64 i = 0; i < n; ++i) {
    const u64 x = rng() >> 32;
    const u64 y = rng() >> 32;
    pts.push_back({x, y, u64{1} << 32});
  }
  return Sample(std::move(pts));
}

Sample subset(const Sample& sample, std::span<const std::size_t> indices) {
  std::vector<SamplePoint> pts;
  pts.reserve(indices.size());
  for (std::size_t i : indices) pts.push_back(sample.points()[i]);
  return Sample(std::move(pts));
}

}  // namespace modinv::discrepancy
