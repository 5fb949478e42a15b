#include "modinv/pointset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "modinv/arith.hpp"
#include "modinv/exact.hpp"
#include "modinv/kloosterman.hpp"

namespace modinv::pointset {

namespace {

constexpr u64 kBlock = 32;

// t = a/c lies in the closed arc [s, e] of the circle, with t in (0, 1].
bool in_arc(u64 a, u64 c, double s, double e) {
  if (exact::fraction_in_closed(a, c, s, e)) return true;
  return e >= 1.0 && exact::compare_fraction_double(a, c, e - 1.0) <= 0;
}

// Index range in `by_x` of points with first coordinate in [lo, hi].
std::pair<std::size_t, std::size_t> x_range(const PointSet& ps, double lo, double hi) {
  const auto order = ps.order_by_x();
  const auto pts = ps.points();
  const auto first = std::partition_point(order.begin(), order.end(), [&](std::uint32_t i) {
    return exact::compare_fraction_double(pts[i].a, pts[i].c, lo) < 0;
  });
  const auto last = std::partition_point(first, order.end(), [&](std::uint32_t i) {
    return exact::compare_fraction_double(pts[i].a, pts[i].c, hi) <= 0;
  });
  return {static_cast<std::size_t>(first - order.begin()),
          static_cast<std::size_t>(last - order.begin())};
}

// Torus difference |u/c - v/d| reduced to at most 1/2, as numerator over c d.
u64 torus_gap(u64 u, u64 c, u64 v, u64 d) {
  const u64 den = c * d;
  const i64 raw = static_cast<i64>(u * d) - static_cast<i64>(v * c);
  u64 g = static_cast<u64>(raw < 0 ? -raw : raw) % den;
  return std::min(g, den - g);
}

struct ExactDistance {
  u128 num = 0;
  u128 den = 1;
};

ExactDistance exact_distance(const InversePair& p, const InversePair& q) {
  const u64 gx = torus_gap(p.a, p.c, q.a, q.c);
  const u64 gy = torus_gap(p.b, p.c, q.b, q.c);
  const u128 den = static_cast<u128>(p.c) * q.c;
  return {static_cast<u128>(gx) * gx + static_cast<u128>(gy) * gy, den * den};
}

bool less(const ExactDistance& a, const ExactDistance& b) {
  // Numerators and denominators stay below 2^62 for the supported X.
  return a.num * b.den < b.num * a.den;
}

}  // namespace

PointSet::PointSet(u64 X, std::vector<InversePair> points) : X_(X), points_(std::move(points)) {
  offsets_.assign(X_ + 1, points_.size());
  for (std::size_t i = points_.size(); i-- > 0;) offsets_[points_[i].c - 1] = i;
  for (std::size_t c = X_; c-- > 0;) offsets_[c] = std::min(offsets_[c], offsets_[c + 1]);
  by_x_.resize(points_.size());
  for (std::size_t i = 0; i < by_x_.size(); ++i) by_x_[i] = static_cast<std::uint32_t>(i);
  std::sort(by_x_.begin(), by_x_.end(), [this](std::uint32_t i, std::uint32_t j) {
    return exact::compare_fractions(points_[i].a, points_[i].c, points_[j].a, points_[j].c) < 0;
  });
}

PointSet generate(u64 X, const Limits& limits) {
  if (X == 0) throw PreconditionError("generate: X must be >= 1");
  if (X > (u64{1} << 15)) {
    throw CapacityError("generate: X = " + std::to_string(X) + " exceeds the supported range");
  }
  const arith::TotientTable table(X);
  const u64 total = table.prefix(X);
  if (total > limits.point_cap) {
    throw CapacityError("generate: N(X) = " + std::to_string(total) + " exceeds the point cap " +
                        std::to_string(limits.point_cap));
  }
  std::vector<InversePair> points(total);
#pragma omp parallel for schedule(dynamic, 16)
  for (u64 c = 1; c <= X; ++c) {
    std::size_t at = table.prefix(c - 1);
    if (c == 1) {
      points[at] = {1, 1, 1};
      continue;
    }
    for (u64 a = 1; a < c; ++a) {
      if (arith::gcd(a, c) != 1) continue;
      const u64 b = *arith::mod_inverse(static_cast<i64>(a), c);
      points[at++] = {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                      static_cast<std::uint32_t>(c)};
    }
  }
  return PointSet(X, std::move(points));
}

std::vector<std::complex<double>> weyl_sums(const PointSet& ps,
                                            std::span<const aggregate::IntPair> freqs) {
  const std::size_t F = freqs.size();
  const u64 X = ps.X();
  const u64 nblocks = X == 0 ? 0 : (X - 1) / kBlock + 1;
  std::vector<KahanSum> re(nblocks * F), im(nblocks * F);
  const auto pts = ps.points();
#pragma omp parallel for schedule(dynamic, 1)
  for (u64 blk = 0; blk < nblocks; ++blk) {
    const u64 c_begin = blk * kBlock + 1;
    const u64 c_end = std::min(X, c_begin + kBlock - 1);
    for (u64 c = c_begin; c <= c_end; ++c) {
      const std::size_t lo = ps.offset(c), hi = ps.offset(c + 1);
      for (std::size_t f = 0; f < F; ++f) {
        const u64 m1 = reduce_mod(freqs[f].m, c);
        const u64 m2 = reduce_mod(freqs[f].n, c);
        KahanSum& r = re[blk * F + f];
        KahanSum& s = im[blk * F + f];
        for (std::size_t i = lo; i < hi; ++i) {
          const u64 k = (m1 * pts[i].a + m2 * pts[i].b) % c;
          r.add(kloosterman::unit_cos(k, c));
          s.add(kloosterman::unit_sin(k, c));
        }
      }
    }
  }
  std::vector<std::complex<double>> out(F);
  for (std::size_t f = 0; f < F; ++f) {
    KahanSum r, s;
    for (u64 blk = 0; blk < nblocks; ++blk) {
      r.add(re[blk * F + f]);
      s.add(im[blk * F + f]);
    }
    out[f] = {r.value(), s.value()};
  }
  return out;
}

std::complex<double> weyl_sum(const PointSet& ps, i64 m1, i64 m2) {
  const aggregate::IntPair f{m1, m2};
  return weyl_sums(ps, {&f, 1})[0];
}

u64 count_in_box(const PointSet& ps, const geometry::Box& box) {
  geometry::validate(box);
  const double x_end = box.xi + box.alpha;
  const double y_end = box.zeta + box.beta;
  const auto pts = ps.points();
  const auto order = ps.order_by_x();
  u64 count = 0;
  const auto scan = [&](double lo, double hi) {
    const auto [first, last] = x_range(ps, lo, hi);
    for (std::size_t k = first; k < last; ++k) {
      const auto& p = pts[order[k]];
      if (in_arc(p.b, p.c, box.zeta, y_end)) ++count;
    }
  };
  scan(box.xi, x_end);
  if (x_end >= 1.0) {
    // Wrapped part [0, x_end - 1], minus points already counted in [xi, x_end].
    const auto [first, last] = x_range(ps, 0.0, x_end - 1.0);
    for (std::size_t k = first; k < last; ++k) {
      const auto& p = pts[order[k]];
      if (exact::compare_fraction_double(p.a, p.c, box.xi) >= 0) continue;
      if (in_arc(p.b, p.c, box.zeta, y_end)) ++count;
    }
  }
  return count;
}

u64 count_in_disc(const PointSet& ps, const geometry::Disc& disc) {
  geometry::validate(disc);
  const auto pts = ps.points();
  const double r2 = disc.radius * disc.radius;
  u64 count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double c = pts[i].c;
    const geometry::Point2 p{(pts[i].a % pts[i].c) / c, (pts[i].b % pts[i].c) / c};
    if (geometry::torus_distance_squared(p, disc.center) <= r2) ++count;
  }
  return count;
}

ClosestPair min_pairwise_distance(const PointSet& ps) {
  const auto pts = ps.points();
  const std::size_t n = pts.size();
  if (n < 2) throw PreconditionError("min_pairwise_distance: need at least two points");

  ExactDistance best = exact_distance(pts[0], pts[1]);
  std::size_t bi = 0, bj = 1;
  const auto consider = [&](std::size_t i, std::size_t j) {
    const auto d = exact_distance(pts[i], pts[j]);
    if (less(d, best) || (!less(best, d) && std::pair{i, j} < std::pair{bi, bj})) {
      best = d;
      bi = i;
      bj = j;
    }
  };

  const u64 G = static_cast<u64>(std::ceil(std::sqrt(static_cast<double>(n))));
  bool certified = false;
  if (G >= 5) {
    std::vector<std::vector<std::uint32_t>> cells(G * G);
    const auto cell = [&](const InversePair& p) {
      const u64 cx = static_cast<u64>(p.a % p.c) * G / p.c;
      const u64 cy = static_cast<u64>(p.b % p.c) * G / p.c;
      return std::pair{cx, cy};
    };
    for (std::size_t i = 0; i < n; ++i) {
      const auto [cx, cy] = cell(pts[i]);
      cells[cx * G + cy].push_back(static_cast<std::uint32_t>(i));
    }
    for (std::size_t i = 0; i < n; ++i) {
      const auto [cx, cy] = cell(pts[i]);
      for (i64 dx = -2; dx <= 2; ++dx) {
        for (i64 dy = -2; dy <= 2; ++dy) {
          const u64 nx = (cx + G + dx) % G, ny = (cy + G + dy) % G;
          for (std::uint32_t j : cells[nx * G + ny]) {
            if (j > i) consider(i, j);
          }
        }
      }
    }
    // Unvisited pairs are more than two cell widths apart along some axis.
    certified = best.num * G * G <= 4 * best.den;
  }
  if (!certified) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) consider(i, j);
    }
  }
  const double dist =
      std::sqrt(static_cast<double>(best.num)) / std::sqrt(static_cast<double>(best.den));
  return {dist, best.num, best.den, pts[bi], pts[bj]};
}

std::vector<InversePair> hyperbola_points(const PointSet& ps) {
  std::vector<InversePair> out;
  for (const auto& p : ps.points()) {
    if (static_cast<u128>(p.a) * p.b * ps.X() < static_cast<u128>(p.c) * p.c) out.push_back(p);
  }
  return out;
}

void write_csv(std::ostream& out, const PointSet& ps) {
  std::string buf = "a,b,c\n";
  for (const auto& p : ps.points()) {
    buf += std::to_string(p.a);
    buf += ',';
    buf += std::to_string(p.b);
    buf += ',';
    buf += std::to_string(p.c);
    buf += '\n';
    if (buf.size() > (1u << 20)) {
      out << buf;
      buf.clear();
    }
  }
  out << buf;
}

void write_svg(std::ostream& out, const PointSet& ps) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\" "
         "width=\"1000\" height=\"1000\">\n"
         "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n<g fill=\"black\">\n";
  char line[96];
  for (const auto& p : ps.points()) {
    const double x = 1000.0 * (p.a % p.c) / p.c;
    const double y = 1000.0 - 1000.0 * (p.b % p.c) / p.c;
    std::snprintf(line, sizeof line, "<circle cx=\"%.4f\" cy=\"%.4f\" r=\"0.5\"/>\n", x, y);
    out << line;
  }
  out << "</g>\n</svg>\n";
}

}  // namespace modinv::pointset
