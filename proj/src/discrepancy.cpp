#include "modinv/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "modinv/exact.hpp"

namespace modinv::discrepancy {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kInf = std::numeric_limits<double>::infinity();

int compare(const Fraction& a, const Fraction& b) {
  return exact::compare_fractions(a.num, a.den, b.num, b.den);
}

// Point t in an exact cyclic arc.
bool in_arc(const Fraction& t, const Arc& arc) {
  const int lo = compare(t, arc.lo);
  const int hi = compare(t, arc.hi);
  const int order = compare(arc.lo, arc.hi);
  if (!arc.open) return order <= 0 ? (lo >= 0 && hi <= 0) : (lo >= 0 || hi <= 0);
  return order < 0 ? (lo > 0 && hi < 0) : (lo > 0 || hi < 0);
}

// Distinct coordinates of one axis, ascending, with the points at each.
struct Axis {
  std::vector<Fraction> coords;
  std::vector<double> values;
  std::vector<std::uint32_t> index;  // per point
  std::vector<std::vector<std::uint32_t>> members;
  [[nodiscard]] std::uint32_t size() const { return static_cast<std::uint32_t>(coords.size()); }
};

Axis build_axis(const Sample& sample, bool second) {
  const auto pts = sample.points();
  const auto coord = [&](std::size_t i) {
    return second ? Fraction{pts[i].yn, pts[i].den} : Fraction{pts[i].xn, pts[i].den};
  };
  std::vector<std::uint32_t> order(pts.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t i, std::uint32_t j) {
    return compare(coord(i), coord(j)) < 0;
  });
  Axis axis;
  axis.index.resize(pts.size());
  for (std::uint32_t p : order) {
    const Fraction f = coord(p);
    if (axis.coords.empty() || compare(axis.coords.back(), f) != 0) {
      axis.coords.push_back(f);
      axis.values.push_back(f.value());
      axis.members.emplace_back();
    }
    axis.index[p] = axis.size() - 1;
    axis.members.back().push_back(p);
  }
  return axis;
}

struct IndexArc {
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;
  bool open = false;
};

bool in_index_arc(std::uint32_t t, const IndexArc& a) {
  if (!a.open) return a.lo <= a.hi ? (a.lo <= t && t <= a.hi) : (t >= a.lo || t <= a.hi);
  return a.lo < a.hi ? (a.lo < t && t < a.hi) : (t > a.lo || t < a.hi);
}

Arc to_arc(const Axis& axis, const IndexArc& a) {
  return {axis.coords[a.lo], axis.coords[a.hi], a.open};
}

double index_length(const Axis& axis, const IndexArc& a) {
  const double d = axis.values[a.hi] - axis.values[a.lo];
  const bool wraps = a.open ? a.hi <= a.lo : a.hi < a.lo;
  return wraps ? d + 1.0 : d;
}

struct Choice {
  double value = kNegInf;
  std::uint32_t k = 0;
  std::uint32_t l = 0;
};

struct Scratch {
  std::vector<double> prefix, lower, suffix;
  std::vector<std::uint32_t> suffix_at;
};

// Best closed arc [Y_k, Y_l] maximizing count/n - L * length, for counts h.
Choice excess_scan(std::span<const std::uint32_t> h, std::span<const double> Y, double L,
                   double n, Scratch& s) {
  const std::size_t d = Y.size();
  s.prefix.resize(d + 1);
  s.lower.resize(d);
  s.suffix.resize(d + 1);
  s.suffix_at.resize(d + 1);
  s.prefix[0] = 0.0;
  for (std::size_t t = 0; t < d; ++t) s.prefix[t + 1] = s.prefix[t] + h[t];
  for (std::size_t k = 0; k < d; ++k) s.lower[k] = s.prefix[k] / n - L * Y[k];

  Choice best;
  double min_b = kInf;
  std::uint32_t at = 0;
  for (std::uint32_t l = 0; l < d; ++l) {
    if (s.lower[l] < min_b) {
      min_b = s.lower[l];
      at = l;
    }
    const double v = (s.prefix[l + 1] / n - L * Y[l]) - min_b;
    if (v > best.value) best = {v, at, l};
  }
  s.suffix[d] = kInf;
  for (std::size_t k = d; k-- > 0;) {
    if (s.lower[k] < s.suffix[k + 1]) {
      s.suffix[k] = s.lower[k];
      s.suffix_at[k] = static_cast<std::uint32_t>(k);
    } else {
      s.suffix[k] = s.suffix[k + 1];
      s.suffix_at[k] = s.suffix_at[k + 1];
    }
  }
  const double total = s.prefix[d] / n - L;
  for (std::uint32_t l = 0; l + 1 < d; ++l) {
    const double v = total + (s.prefix[l + 1] / n - L * Y[l]) - s.suffix[l + 1];
    if (v > best.value) best = {v, s.suffix_at[l + 1], l};
  }
  return best;
}

// Best open arc (Y_k, Y_l) maximizing L * length - count/n, for counts h.
Choice deficit_scan(std::span<const std::uint32_t> h, std::span<const double> Y, double L,
                    double n, Scratch& s) {
  const std::size_t d = Y.size();
  s.prefix.resize(d + 1);
  s.lower.resize(d);
  s.suffix.resize(d + 1);
  s.suffix_at.resize(d + 1);
  s.prefix[0] = 0.0;
  for (std::size_t t = 0; t < d; ++t) s.prefix[t + 1] = s.prefix[t] + h[t];
  for (std::size_t k = 0; k < d; ++k) s.lower[k] = L * Y[k] - s.prefix[k + 1] / n;

  Choice best;
  double min_c = kInf;
  std::uint32_t at = 0;
  for (std::uint32_t l = 0; l < d; ++l) {
    if (l > 0) {
      const double v = (L * Y[l] - s.prefix[l] / n) - min_c;
      if (v > best.value) best = {v, at, l};
    }
    if (s.lower[l] < min_c) {
      min_c = s.lower[l];
      at = l;
    }
  }
  s.suffix[d] = kInf;
  for (std::size_t k = d; k-- > 0;) {
    if (s.lower[k] < s.suffix[k + 1]) {
      s.suffix[k] = s.lower[k];
      s.suffix_at[k] = static_cast<std::uint32_t>(k);
    } else {
      s.suffix[k] = s.suffix[k + 1];
      s.suffix_at[k] = s.suffix_at[k + 1];
    }
  }
  const double total = L - s.prefix[d] / n;
  for (std::uint32_t l = 0; l < d; ++l) {
    const double v = total + (L * Y[l] - s.prefix[l] / n) - s.suffix[l];
    if (v > best.value) best = {v, s.suffix_at[l], l};
  }
  return best;
}

struct Candidate {
  double value = kNegInf;
  IndexArc x;
  IndexArc y;
};

// Best arc on `other` for a fixed arc on `axis`; both arcs share the open flag.
Choice best_partner(const Axis& axis, const IndexArc& arc, const Axis& other, double n,
                    std::vector<std::uint32_t>& h, Scratch& s) {
  h.assign(other.size(), 0);
  for (std::size_t p = 0; p < axis.index.size(); ++p) {
    if (in_index_arc(axis.index[p], arc)) ++h[other.index[p]];
  }
  const double L = index_length(axis, arc);
  return arc.open ? deficit_scan(h, other.values, L, n, s) : excess_scan(h, other.values, L, n, s);
}

Candidate exact_search(const Axis& ax, const Axis& ay, double n) {
  const std::uint32_t dx = ax.size();
  std::vector<Candidate> per_start(dx);
#pragma omp parallel
  {
    std::vector<std::uint32_t> h(ay.size());
    Scratch scratch;
#pragma omp for schedule(dynamic, 1)
    for (std::uint32_t i = 0; i < dx; ++i) {
      Candidate best;
      const auto consider = [&](const IndexArc& xa, const Choice& ch) {
        if (ch.value > best.value) best = {ch.value, xa, {ch.k, ch.l, xa.open}};
      };
      std::fill(h.begin(), h.end(), 0u);
      for (std::uint32_t t = 0; t < dx; ++t) {
        const std::uint32_t j = (i + t) % dx;
        for (std::uint32_t p : ax.members[j]) ++h[ay.index[p]];
        const IndexArc xa{i, j, false};
        consider(xa, excess_scan(h, ay.values, index_length(ax, xa), n, scratch));
      }
      std::fill(h.begin(), h.end(), 0u);
      for (std::uint32_t t = 0; t < dx; ++t) {
        const std::uint32_t j = (i + t + 1) % dx;
        if (t >= 1) {
          for (std::uint32_t p : ax.members[(i + t) % dx]) ++h[ay.index[p]];
        }
        const IndexArc xa{i, j, true};
        consider(xa, deficit_scan(h, ay.values, index_length(ax, xa), n, scratch));
      }
      per_start[i] = best;
    }
  }
  Candidate best;
  for (const auto& c : per_start) {
    if (c.value > best.value) best = c;
  }
  return best;
}

std::vector<std::uint32_t> quantiles(std::uint32_t d, int grid) {
  std::vector<std::uint32_t> q;
  const u64 g = static_cast<u64>(std::max(grid, 1));
  for (u64 s = 0; s < g; ++s) {
    const auto v = static_cast<std::uint32_t>(s * d / g);
    if (q.empty() || q.back() != v) q.push_back(v);
  }
  return q;
}

Candidate local_search(const Axis& ax, const Axis& ay, double n, const BoxOptions& options) {
  struct Seed {
    bool x_first;
    IndexArc arc;
  };
  std::vector<Seed> seeds;
  for (bool x_first : {true, false}) {
    const auto q = quantiles(x_first ? ax.size() : ay.size(), options.seed_grid);
    for (bool open : {false, true}) {
      for (std::uint32_t a : q) {
        for (std::uint32_t b : q) seeds.push_back({x_first, {a, b, open}});
      }
    }
  }
  std::vector<Candidate> results(seeds.size());
#pragma omp parallel
  {
    std::vector<std::uint32_t> h;
    Scratch scratch;
#pragma omp for schedule(dynamic, 1)
    for (std::size_t s = 0; s < seeds.size(); ++s) {
      const Axis& first = seeds[s].x_first ? ax : ay;
      const Axis& second = seeds[s].x_first ? ay : ax;
      IndexArc a = seeds[s].arc;
      IndexArc b;
      double best = kNegInf;
      IndexArc best_a = a, best_b = a;
      for (int round = 0; round < options.max_rounds; ++round) {
        const Choice cb = best_partner(first, a, second, n, h, scratch);
        if (!(cb.value > best)) break;
        b = {cb.k, cb.l, a.open};
        best = cb.value;
        best_a = a;
        best_b = b;
        const Choice ca = best_partner(second, b, first, n, h, scratch);
        if (!(ca.value > best)) break;
        a = {ca.k, ca.l, a.open};
        best = ca.value;
        best_a = a;
      }
      results[s] = seeds[s].x_first ? Candidate{best, best_a, best_b}
                                    : Candidate{best, best_b, best_a};
    }
  }
  Candidate best;
  for (const auto& c : results) {
    if (c.value > best.value) best = c;
  }
  return best;
}

}  // namespace

const char* to_string(BoxMode mode) {
  return mode == BoxMode::exact_small ? "exact-small" : "search";
}

double arc_length(const Arc& arc) {
  const double d = arc.hi.value() - arc.lo.value();
  const int order = compare(arc.hi, arc.lo);
  const bool wraps = arc.open ? order <= 0 : order < 0;
  return wraps ? d + 1.0 : d;
}

double box_deviation(const Sample& sample, const Arc& x, const Arc& y, u64* count) {
  if (x.open != y.open) throw PreconditionError("box_deviation: arcs must share the open flag");
  u64 inside = 0;
  for (const auto& p : sample.points()) {
    if (in_arc({p.xn, p.den}, x) && in_arc({p.yn, p.den}, y)) ++inside;
  }
  if (count) *count = inside;
  const double frac = static_cast<double>(inside) / static_cast<double>(sample.size());
  const double measure = arc_length(x) * arc_length(y);
  return x.open ? measure - frac : frac - measure;
}

BoxResult box_discrepancy(const Sample& sample, BoxMode mode, const BoxOptions& options) {
  if (mode == BoxMode::exact_small && sample.size() > options.exact_cap) {
    throw CapacityError("box_discrepancy: " + std::to_string(sample.size()) +
                        " points exceed the exact-small cap " + std::to_string(options.exact_cap));
  }
  const Axis ax = build_axis(sample, false);
  const Axis ay = build_axis(sample, true);
  const double n = static_cast<double>(sample.size());
  const Candidate best =
      mode == BoxMode::exact_small ? exact_search(ax, ay, n) : local_search(ax, ay, n, options);

  BoxResult r;
  r.x = to_arc(ax, best.x);
  r.y = to_arc(ay, best.y);
  r.open = best.x.open;
  r.value = box_deviation(sample, r.x, r.y, &r.count);
  r.witness = {r.x.lo.value(), r.y.lo.value(), arc_length(r.x), arc_length(r.y)};
  r.lower_bound = mode == BoxMode::search;
  r.mode = mode;
  return r;
}

KoksmaSzusz koksma_szusz_bound(const Sample& sample, u64 M) {
  if (M == 0) throw PreconditionError("koksma_szusz_bound: M must be >= 1");
  const i64 m = static_cast<i64>(M);
  std::vector<aggregate::IntPair> freqs;
  for (i64 a = -m; a <= m; ++a) {
    for (i64 b = -m; b <= m; ++b) {
      if (a != 0 || b != 0) freqs.push_back({a, b});
    }
  }
  const auto sums = sample.weyl_sums(freqs);
  KahanSum acc;
  for (std::size_t f = 0; f < freqs.size(); ++f) {
    const double r = static_cast<double>((std::abs(freqs[f].m) + 1) * (std::abs(freqs[f].n) + 1));
    acc.add(std::abs(sums[f]) / r);
  }
  KoksmaSzusz out;
  out.M = M;
  out.weyl_term = acc.value() / static_cast<double>(sample.size());
  out.value = 1.0 / static_cast<double>(M) + out.weyl_term;
  return out;
}

namespace {

void fill_relative(CountError& e, u64 n) {
  const double frac = static_cast<double>(e.count) / static_cast<double>(n);
  if (e.measure == 0.0) {
    e.absolute = true;
    e.relative_count_error = std::fabs(frac - e.measure);
  } else {
    e.relative_count_error = std::fabs(frac / e.measure - 1.0);
  }
}

}  // namespace

CountError bmv_error(const Sample& sample, const geometry::Box& box, u64 L1, u64 L2) {
  geometry::validate(box);
  if (box.alpha * static_cast<double>(L1) < 2.0 || box.beta * static_cast<double>(L2) < 2.0) {
    throw PreconditionError("bmv_error: requires alpha L1 >= 2 and beta L2 >= 2");
  }
  std::vector<aggregate::IntPair> freqs;
  for (i64 a = -static_cast<i64>(L1); a <= static_cast<i64>(L1); ++a) {
    for (i64 b = -static_cast<i64>(L2); b <= static_cast<i64>(L2); ++b) {
      if (a != 0 || b != 0) freqs.push_back({a, b});
    }
  }
  const auto sums = sample.weyl_sums(freqs);
  KahanSum acc;
  for (const auto& w : sums) acc.add(std::abs(w));
  CountError e;
  e.E = 1.0 / (box.alpha * static_cast<double>(L1)) + 1.0 / (box.beta * static_cast<double>(L2)) +
        acc.value() / static_cast<double>(sample.size());
  e.count = sample.count_in_box(box);
  e.measure = box.measure();
  fill_relative(e, sample.size());
  return e;
}

CountError harman_error(const Sample& sample, const geometry::Disc& disc, double L) {
  geometry::validate(disc);
  if (!(L >= 1.0)) throw PreconditionError("harman_error: requires L >= 1");
  const i64 bound = static_cast<i64>(std::floor(L));
  std::vector<aggregate::IntPair> freqs;
  std::vector<double> norms;
  for (i64 a = -bound; a <= bound; ++a) {
    for (i64 b = -bound; b <= bound; ++b) {
      if (a == 0 && b == 0) continue;
      const double norm = std::sqrt(static_cast<double>(a * a + b * b));
      if (norm > L) continue;
      freqs.push_back({a, b});
      norms.push_back(norm);
    }
  }
  const auto sums = sample.weyl_sums(freqs);
  const double R = disc.radius;
  const double inv_l2 = 1.0 / (L * L);
  KahanSum acc;
  for (std::size_t f = 0; f < freqs.size(); ++f) {
    const double weight = inv_l2 + std::min(R * R, std::sqrt(R) / std::pow(norms[f], 1.5));
    acc.add(weight * std::abs(sums[f]));
  }
  CountError e;
  e.E = R / L + inv_l2 + acc.value() / static_cast<double>(sample.size());
  e.count = sample.count_in_disc(disc);
  e.measure = std::numbers::pi * R * R;
  fill_relative(e, sample.size());
  return e;
}

BallResult best_disc_at(const Sample& sample, geometry::Point2 center) {
  const std::size_t n = sample.size();
  std::vector<double> d2(n);
  for (std::size_t i = 0; i < n; ++i) {
    d2[i] = geometry::torus_distance_squared({sample.x(i), sample.y(i)}, center);
  }
  std::sort(d2.begin(), d2.end());
  const double nd = static_cast<double>(n);
  constexpr double pi = std::numbers::pi;
  BallResult best;
  best.value = kNegInf;
  std::size_t k = 0;
  while (k <= n) {
    const double r2 = k < n ? std::min(d2[k], 0.25) : 0.25;
    std::size_t end = k;
    while (end < n && d2[end] <= r2) ++end;
    // Open disc of radius sqrt(r2) from below: holds the first k points.
    {
      double R = std::sqrt(r2);
      while (R * R > r2) R = std::nextafter(R, 0.0);
      const double v = pi * R * R - static_cast<double>(k) / nd;
      if (v > best.value) best = {v, {center, R}, true, k};
    }
    if (r2 >= 0.25) break;
    // Closed disc of radius sqrt(r2): holds the first `end` points.
    {
      double R = std::sqrt(r2);
      while (R * R < r2) R = std::nextafter(R, 1.0);
      const double v = static_cast<double>(end) / nd - pi * R * R;
      if (v > best.value) best = {v, {center, R}, false, end};
    }
    k = end;
  }
  return best;
}

BallResult ball_discrepancy_search(const Sample& sample, int seeds) {
  if (seeds < 1) throw PreconditionError("ball_discrepancy_search: seeds must be >= 1");
  const std::size_t g = static_cast<std::size_t>(seeds);
  std::vector<geometry::Point2> centers;
  for (std::size_t s = 0; s < g; ++s) {
    for (std::size_t t = 0; t < g; ++t) {
      centers.push_back({static_cast<double>(s) / g, static_cast<double>(t) / g});
    }
  }
  const std::size_t stride = std::max<std::size_t>(1, sample.size() / (g * g));
  for (std::size_t i = 0; i < sample.size() && centers.size() < 2 * g * g; i += stride) {
    centers.push_back({sample.x(i), sample.y(i)});
  }
  std::vector<BallResult> results(centers.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < centers.size(); ++i) results[i] = best_disc_at(sample, centers[i]);

  // Refine the best few centers by a shrinking pattern search.
  std::vector<std::size_t> order(results.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return results[a].value > results[b].value;
  });
  const std::size_t refine = std::min<std::size_t>(4, order.size());
  std::vector<BallResult> refined(refine);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t r = 0; r < refine; ++r) {
    BallResult cur = results[order[r]];
    double step = 0.5 / static_cast<double>(g);
    for (int iter = 0; iter < 48 && step > 1e-9; ++iter) {
      bool moved = false;
      for (int dx = -1; dx <= 1 && !moved; ++dx) {
        for (int dy = -1; dy <= 1 && !moved; ++dy) {
          if (dx == 0 && dy == 0) continue;
          double cx = cur.witness.center.x + dx * step;
          double cy = cur.witness.center.y + dy * step;
          cx -= std::floor(cx);
          cy -= std::floor(cy);
          if (cx >= 1.0) cx = 0.0;
          if (cy >= 1.0) cy = 0.0;
          const auto cand = best_disc_at(sample, {cx, cy});
          if (cand.value > cur.value) {
            cur = cand;
            moved = true;
          }
        }
      }
      if (!moved) step *= 0.5;
    }
    refined[r] = cur;
  }
  BallResult best = results[order.front()];
  for (const auto& r : refined) {
    if (r.value > best.value) best = r;
  }
  return best;
}

HyperbolaBound hyperbola_convex_lower_bound(const pointset::PointSet& ps, double slack) {
  if (ps.X() < 3) throw PreconditionError("hyperbola_convex_lower_bound: X must be >= 3");
  HyperbolaBound b;
  b.X = ps.X();
  b.count = ps.size() - pointset::hyperbola_points(ps).size();
  b.area = geometry::HyperbolaRegion{ps.X()}.area();
  b.measured = std::fabs(static_cast<double>(b.count) / static_cast<double>(ps.size()) - b.area);
  b.slack = slack;
  b.floor = (std::log(static_cast<double>(ps.X())) - slack) / static_cast<double>(ps.X());
  return b;
}

}  // namespace modinv::discrepancy
