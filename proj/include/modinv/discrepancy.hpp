#pragma once

#include <vector>

#include "modinv/common.hpp"
#include "modinv/geometry.hpp"
#include "modinv/pointset.hpp"
#include "modinv/sample.hpp"

namespace modinv::discrepancy {

enum class BoxMode { exact_small, search };

const char* to_string(BoxMode mode);

struct BoxOptions {
  u64 exact_cap = 1000;  // largest sample accepted by exact_small
  int seed_grid = 16;    // search: seeds are arcs between seed_grid quantiles, per axis
  int max_rounds = 8;    // search: alternating improvement rounds per seed
};

/// Exact rational num / den.
struct Fraction {
  u64 num = 0;
  u64 den = 1;
  [[nodiscard]] double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// Cyclic arc of the circle between two point coordinates. Closed: [lo, hi].
/// Open: (lo, hi), where lo == hi means everything except lo.
struct Arc {
  Fraction lo;
  Fraction hi;
  bool open = false;
};

/// hi - lo in doubles, plus 1 when the arc wraps (open arcs with lo == hi have length 1).
double arc_length(const Arc& arc);

/// Extremal box. When `open` is false the witness is a closed box holding
/// `count` points and value = count/n - measure. When `open` is true the value
/// measure - count/n is the limit over boxes shrinking to the witness from
/// inside, whose interior holds `count` points. `witness` is the same box in
/// corner/side form, rounded to doubles.
struct BoxResult {
  double value = 0.0;
  Arc x;
  Arc y;
  geometry::Box witness;
  bool open = false;
  u64 count = 0;
  bool lower_bound = false;  // true for search mode
  BoxMode mode = BoxMode::exact_small;
};

/// exact_small throws CapacityError when the sample exceeds the cap.
BoxResult box_discrepancy(const Sample& sample, BoxMode mode, const BoxOptions& options = {});

/// Deviation of the box x * y (both arcs closed or both open) by point counting:
/// count/n - measure for closed arcs, measure - count/n for open arcs.
double box_deviation(const Sample& sample, const Arc& x, const Arc& y, u64* count = nullptr);

struct KoksmaSzusz {
  u64 M = 1;
  double value = 0.0;        // 1/M + weyl_term
  double weyl_term = 0.0;    // (1/n) sum_{0 < |m|_inf <= M} |W(m)| / prod(|m_i| + 1)
  double implied_constant = 1.0;
};

KoksmaSzusz koksma_szusz_bound(const Sample& sample, u64 M);

/// Relative count error |count / (measure n) - 1|; with zero measure the
/// absolute error |count / n - measure| is reported and flagged.
struct CountError {
  double E = 0.0;
  u64 count = 0;
  double measure = 0.0;
  double relative_count_error = 0.0;
  bool absolute = false;
};

/// Requires alpha L1 >= 2 and beta L2 >= 2.
CountError bmv_error(const Sample& sample, const geometry::Box& box, u64 L1, u64 L2);

/// Requires radius < 1/2 and L >= 1.
CountError harman_error(const Sample& sample, const geometry::Disc& disc, double L);

/// Extremal disc, same `open` convention as BoxResult. Always a lower bound.
struct BallResult {
  double value = 0.0;
  geometry::Disc witness;
  bool open = false;
  u64 count = 0;
};

/// Centers: a seeds x seeds grid plus up to seeds^2 sample points, then
/// pattern-search refinement of the best few. Requires seeds >= 1.
BallResult ball_discrepancy_search(const Sample& sample, int seeds);

/// Best disc deviation for one center over all radii in [0, 1/2).
BallResult best_disc_at(const Sample& sample, geometry::Point2 center);

struct HyperbolaBound {
  u64 X = 0;
  u64 count = 0;        // N(X) - #hyperbola points
  double area = 0.0;    // 1 - (1 + ln X)/X
  double measured = 0.0;
  double floor = 0.0;   // (ln X - C0)/X
  double slack = 2.0;   // C0
};

/// Requires X >= 3.
HyperbolaBound hyperbola_convex_lower_bound(const pointset::PointSet& ps, double slack = 2.0);

}  // namespace modinv::discrepancy
