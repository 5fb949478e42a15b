#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace modinv::oracle {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr long double kTwoPi = 6.283185307179586476925286766559005768L;

u64 mod(i64 x, u64 m) {
  const i64 r = x % static_cast<i64>(m);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

int cmp(const Frac& a, const Frac& b) {
  const u128 l = static_cast<u128>(a.num) * b.den;
  const u128 r = static_cast<u128>(b.num) * a.den;
  return l < r ? -1 : (l > r ? 1 : 0);
}

bool in_cyclic(const Frac& t, const Frac& lo, const Frac& hi, bool open) {
  const int a = cmp(t, lo), b = cmp(t, hi), o = cmp(lo, hi);
  if (!open) return o <= 0 ? (a >= 0 && b <= 0) : (a >= 0 || b <= 0);
  return o < 0 ? (a > 0 && b < 0) : (a > 0 || b < 0);
}

double value_of(const Frac& f) { return static_cast<double>(f.num) / static_cast<double>(f.den); }

double cyclic_length(const Frac& lo, const Frac& hi, bool open) {
  const double d = value_of(hi) - value_of(lo);
  const int o = cmp(hi, lo);
  return (open ? o <= 0 : o < 0) ? d + 1.0 : d;
}

std::vector<Frac> distinct(std::vector<Frac> v) {
  std::sort(v.begin(), v.end(), [](const Frac& a, const Frac& b) { return cmp(a, b) < 0; });
  std::vector<Frac> out;
  for (const auto& f : v) {
    if (out.empty() || cmp(out.back(), f) != 0) out.push_back(f);
  }
  return out;
}

bool corner_inside(const std::vector<GridVertex>& poly, i64 x, i64 y) {
  // Corner (x, y) in units of 2^-40 against vertices in units of 2^-32.
  return polygon_contains(poly, static_cast<u64>(x), static_cast<u64>(y), u64{1} << 40);
}

}  // namespace

bool Triple::operator<(const Triple& o) const {
  if (c != o.c) return c < o.c;
  if (a != o.a) return a < o.a;
  return b < o.b;
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    const u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 inverse_by_search(i64 a, u64 c) {
  const u64 r = mod(a, c);
  for (u64 b = 1; b <= c; ++b) {
    if ((r * b) % c == 1 % c) return b;
  }
  return 0;
}

u64 phi(u64 n) {
  u64 count = 0;
  for (u64 a = 1; a <= n; ++a) count += gcd(a, n) == 1 ? 1 : 0;
  return count;
}

u64 tau(u64 n) {
  u64 count = 0;
  for (u64 d = 1; d <= n; ++d) count += n % d == 0 ? 1 : 0;
  return count;
}

u64 totient_prefix(u64 X) {
  u64 total = 0;
  for (u64 c = 1; c <= X; ++c) total += phi(c);
  return total;
}

double kloosterman(i64 m, i64 n, u64 c) {
  long double total = 0.0L;
  for (u64 a = 1; a <= c; ++a) {
    if (gcd(a, c) != 1) continue;
    const u64 ab = inverse_by_search(static_cast<i64>(a), c);
    const u64 k = (mod(m, c) * a + mod(n, c) * ab) % c;
    total += std::cos(kTwoPi * static_cast<long double>(k) / static_cast<long double>(c));
  }
  return static_cast<double>(total);
}

double second_moment(u64 N, u64 X) {
  long double total = 0.0L;
  for (i64 sign : {-1, 1}) {
    for (u64 n = N; n < 2 * N; ++n) {
      long double t = 0.0L;
      for (u64 c = 1; c <= X; ++c) t += kloosterman(sign * static_cast<i64>(n), 1, c);
      total += t * t;
    }
  }
  return static_cast<double>(total);
}

double second_moment_normalized(u64 N, u64 X) {
  long double total = 0.0L;
  for (u64 n = N; n < 2 * N; ++n) {
    for (i64 sign : {1, -1}) {
      long double t = 0.0L;
      for (u64 c = X; c < 2 * X; ++c) {
        t += kloosterman(static_cast<i64>(n), sign, c) / static_cast<long double>(c);
      }
      total += t * t;
    }
  }
  return static_cast<double>(total);
}

std::vector<Triple> inverse_pairs(u64 X) {
  std::vector<Triple> out;
  for (u64 c = 1; c <= X; ++c) {
    for (u64 a = 1; a <= c; ++a) {
      for (u64 b = 1; b <= c; ++b) {
        if ((a * b) % c == 1 % c && gcd(a, c) == 1) out.push_back({a, b, c});
      }
    }
  }
  // c = 1 admits only a = b = 1 in [1, 1].
  return out;
}

std::vector<Triple> hyperbola_filter(const std::vector<Triple>& pts, u64 X) {
  std::vector<Triple> out;
  for (const auto& p : pts) {
    if (p.a * p.b * X < p.c * p.c) out.push_back(p);
  }
  return out;
}

bool in_closed_arc(u64 a, u64 c, double s, double e) {
  const long double t = static_cast<long double>(a) / static_cast<long double>(c);
  if (t >= s && t <= e) return true;
  return e >= 1.0 && t <= static_cast<long double>(e) - 1.0L;
}

u64 box_count(const std::vector<Triple>& pts, double xi, double zeta, double alpha, double beta) {
  // Box ends are the double sums xi + alpha and zeta + beta.
  const double x_end = xi + alpha;
  const double y_end = zeta + beta;
  u64 count = 0;
  for (const auto& p : pts) {
    if (in_closed_arc(p.a, p.c, xi, x_end) && in_closed_arc(p.b, p.c, zeta, y_end)) ++count;
  }
  return count;
}

long double min_distance_squared(const std::vector<Triple>& pts) {
  long double best = 10.0L;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const auto coord = [](u64 a, u64 c) {
        return static_cast<long double>(a % c) / static_cast<long double>(c);
      };
      long double dx = std::fabs(coord(pts[i].a, pts[i].c) - coord(pts[j].a, pts[j].c));
      long double dy = std::fabs(coord(pts[i].b, pts[i].c) - coord(pts[j].b, pts[j].c));
      dx = std::min(dx, 1.0L - dx);
      dy = std::min(dy, 1.0L - dy);
      best = std::min(best, dx * dx + dy * dy);
    }
  }
  return best;
}

double box_value(const std::vector<FracPoint>& pts, Frac xlo, Frac xhi, Frac ylo, Frac yhi,
                 bool open, u64* count) {
  u64 inside = 0;
  for (const auto& p : pts) {
    if (in_cyclic({p.xn, p.den}, xlo, xhi, open) && in_cyclic({p.yn, p.den}, ylo, yhi, open)) {
      ++inside;
    }
  }
  if (count) *count = inside;
  const double frac = static_cast<double>(inside) / static_cast<double>(pts.size());
  const double measure = cyclic_length(xlo, xhi, open) * cyclic_length(ylo, yhi, open);
  return std::fabs(frac - measure);
}

BoxOracle box_discrepancy(const std::vector<FracPoint>& pts) {
  if (pts.empty() || pts.size() > 64) throw std::invalid_argument("oracle: need 1..64 points");
  std::vector<Frac> xs, ys;
  for (const auto& p : pts) {
    xs.push_back({p.xn, p.den});
    ys.push_back({p.yn, p.den});
  }
  xs = distinct(xs);
  ys = distinct(ys);

  struct Side {
    u64 mask;
    double length;
  };
  const auto sides = [&](const std::vector<Frac>& coords, bool second) {
    std::vector<Side> out;
    for (bool open : {false, true}) {
      for (const auto& lo : coords) {
        for (const auto& hi : coords) {
          u64 mask = 0;
          for (std::size_t p = 0; p < pts.size(); ++p) {
            const Frac t = second ? Frac{pts[p].yn, pts[p].den} : Frac{pts[p].xn, pts[p].den};
            if (in_cyclic(t, lo, hi, open)) mask |= u64{1} << p;
          }
          out.push_back({mask, cyclic_length(lo, hi, open)});
        }
      }
    }
    return out;
  };
  const auto xsides = sides(xs, false);
  const auto ysides = sides(ys, true);
  const double n = static_cast<double>(pts.size());
  BoxOracle best;
  for (const auto& sx : xsides) {
    for (const auto& sy : ysides) {
      const u64 count = static_cast<u64>(__builtin_popcountll(sx.mask & sy.mask));
      const double v = std::fabs(static_cast<double>(count) / n - sx.length * sy.length);
      if (v > best.value) best = {v, count};
    }
  }
  return best;
}

bool polygon_contains(const std::vector<GridVertex>& poly, u64 xn, u64 yn, u64 den) {
  const std::size_t k = poly.size();
  for (std::size_t i = 0; i < k; ++i) {
    const GridVertex& a = poly[i];
    const GridVertex& b = poly[(i + 1) % k];
    // Cross product of (b - a) and (p - a), everything scaled by den * 2^32.
    const i128 ex = b.x - a.x, ey = b.y - a.y;
    const i128 px = (static_cast<i128>(xn) << 32) - static_cast<i128>(a.x) * den;
    const i128 py = (static_cast<i128>(yn) << 32) - static_cast<i128>(a.y) * den;
    if (ex * py - ey * px < 0) return false;
  }
  return true;
}

std::vector<std::set<std::pair<i64, i64>>> cover_families(const std::vector<GridVertex>& poly,
                                                           i64 off_x, i64 off_y, int depth) {
  const i64 unit = i64{1} << 40;
  std::vector<std::set<std::pair<i64, i64>>> inside(static_cast<std::size_t>(depth) + 1);
  std::vector<std::set<std::pair<i64, i64>>> families(static_cast<std::size_t>(depth));
  for (int level = 1; level <= depth; ++level) {
    const i64 s = unit >> level;
    const i64 u_lo = -(off_x / s) - 2, u_hi = (unit - off_x) / s + 2;
    const i64 v_lo = -(off_y / s) - 2, v_hi = (unit - off_y) / s + 2;
    for (i64 u = u_lo; u <= u_hi; ++u) {
      for (i64 v = v_lo; v <= v_hi; ++v) {
        const i64 x0 = off_x + u * s, y0 = off_y + v * s;
        if (x0 < 0 || y0 < 0 || x0 + s > unit || y0 + s > unit) continue;
        const bool ok = corner_inside(poly, x0, y0) && corner_inside(poly, x0 + s, y0) &&
                        corner_inside(poly, x0, y0 + s) && corner_inside(poly, x0 + s, y0 + s);
        if (!ok) continue;
        inside[static_cast<std::size_t>(level)].insert({u, v});
        // The only level-(level-1) square that can contain (u, v) is its parent.
        const auto parent = std::pair{(u - (u < 0 ? 1 : 0)) / 2, (v - (v < 0 ? 1 : 0)) / 2};
        if (level == 1 || !inside[static_cast<std::size_t>(level - 1)].count(parent)) {
          families[static_cast<std::size_t>(level - 1)].insert({u, v});
        }
      }
    }
  }
  return families;
}

}  // namespace modinv::oracle
