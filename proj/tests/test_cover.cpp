#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "modinv/cover.hpp"
#include "oracles/oracles.hpp"

using namespace modinv;
using discrepancy::CoverOffsets;
using geometry::ConvexPolygon;
using geometry::Point2;

namespace {

std::vector<oracle::GridVertex> grid_of(const ConvexPolygon& p) {
  std::vector<oracle::GridVertex> out;
  for (const auto& v : p.grid_vertices()) out.push_back({v.x, v.y});
  return out;
}

std::vector<std::set<std::pair<i64, i64>>> as_sets(const discrepancy::DyadicCover& c) {
  std::vector<std::set<std::pair<i64, i64>>> out(static_cast<std::size_t>(c.depth));
  for (int level = 1; level <= c.depth; ++level) {
    for (const auto& run : c.families[static_cast<std::size_t>(level - 1)]) {
      REQUIRE(run.level == level);
      REQUIRE(run.u_begin < run.u_end);
      for (i64 u = run.u_begin; u < run.u_end; ++u) out[static_cast<std::size_t>(level - 1)].insert({u, run.v});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("convex polygon construction") {
  const std::vector<Point2> cw = {{0.1, 0.1}, {0.1, 0.9}, {0.9, 0.9}, {0.9, 0.1}};
  const auto sq = ConvexPolygon::from_points(cw);
  CHECK(sq.area() == doctest::Approx(0.64).epsilon(1e-9));
  CHECK(sq.perimeter() == doctest::Approx(3.2).epsilon(1e-9));
  const auto v = sq.vertices();
  REQUIRE(v.size() == 4);
  // Counterclockwise order after normalisation.
  double twice = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  CHECK(twice > 0.0);
  CHECK(sq.contains(1, 2, 4));
  CHECK_FALSE(sq.contains(0, 1, 2));

  const std::vector<Point2> collinear = {{0.1, 0.1}, {0.5, 0.5}, {0.9, 0.9}};
  CHECK_THROWS_AS(ConvexPolygon::from_points(collinear), PreconditionError);
  const std::vector<Point2> dent = {{0.1, 0.1}, {0.9, 0.1}, {0.5, 0.3}, {0.9, 0.9}, {0.1, 0.9}};
  CHECK_THROWS_AS(ConvexPolygon::from_points(dent), PreconditionError);
  const std::vector<Point2> outside = {{0.1, 0.1}, {1.2, 0.1}, {0.5, 0.9}};
  CHECK_THROWS_AS(ConvexPolygon::from_points(outside), PreconditionError);
}

TEST_CASE("polygon membership matches the oracle") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 20; ++k) {
    const auto poly = geometry::random_convex_polygon(rng, 10);
    const auto g = grid_of(poly);
    for (int i = 0; i < 500; ++i) {
      const u64 den = 1 + rng() % 997;
      const u64 x = rng() % (den + 1), y = rng() % (den + 1);
      REQUIRE(poly.contains(x, y, den) == oracle::polygon_contains(g, x, y, den));
    }
  }
}

TEST_CASE("hyperbola region") {
  const geometry::HyperbolaRegion h{100};
  CHECK(h.area() == doctest::Approx(1.0 - (1.0 + std::log(100.0)) / 100.0));
  CHECK(h.contains(1, 1, 10));
  CHECK_FALSE(h.contains(1, 1, 11));
  CHECK(geometry::area(geometry::Region{h}) == h.area());
}

TEST_CASE("tiny region has an empty cover") {
  const auto tri = ConvexPolygon::from_points(std::vector<Point2>{{0.5, 0.5}, {0.5 + 1e-4, 0.5}, {0.5, 0.5 + 1e-4}});
  const auto cover = discrepancy::dyadic_cover(tri, 12);
  for (int level = 1; level <= 12; ++level) CHECK(cover.family_size(level) == 0);
  CHECK(cover.covered_measure() == 0.0);
}

TEST_CASE("axis square cover matches brute force") {
  const double d = 1.0 / 1024;
  const auto sq = ConvexPolygon::from_points(
      std::vector<Point2>{{0.125 + d, 0.125 + d}, {0.875 - d, 0.125 + d}, {0.875 - d, 0.875 - d}, {0.125 + d, 0.875 - d}});
  for (CoverOffsets off : {CoverOffsets{}, CoverOffsets{0, 0}, CoverOffsets{1, (i64{1} << 39) + 3}}) {
    const auto cover = discrepancy::dyadic_cover(sq, 6, off);
    const auto brute = oracle::cover_families(grid_of(sq), off.x, off.y, 6);
    REQUIRE(as_sets(cover) == brute);
  }
  const auto aligned = discrepancy::dyadic_cover(sq, 3, {0, 0});
  CHECK(aligned.family_size(1) == 0);  // no 1/2-square fits inside [1/8, 7/8]^2 on the aligned grid
  CHECK(aligned.family_size(2) == 4);  // [1/4, 3/4]^2
}

TEST_CASE("random polygon covers match brute force") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 15; ++k) {
    const auto poly = geometry::random_convex_polygon(rng, 5 + k);
    const auto cover = discrepancy::dyadic_cover(poly, 7);
    const auto brute = oracle::cover_families(grid_of(poly), cover.offsets.x, cover.offsets.y, 7);
    REQUIRE(as_sets(cover) == brute);
  }
}

TEST_CASE("cover bounds on random polygons") {
  const double eta = 4.0 + std::numbers::pi;
  std::mt19937_64 rng(77);
  for (int k = 0; k < 20; ++k) {
    const auto poly = geometry::random_convex_polygon(rng, 12);
    const auto cover = discrepancy::dyadic_cover(poly, 12);
    double covered = 0.0;
    for (int level = 1; level <= 12; ++level) {
      REQUIRE(static_cast<double>(cover.family_size(level)) <= eta * std::pow(2.0, level + 1.5));
      covered += cover.family_measure(level);
      const double defect = poly.area() - covered;
      REQUIRE(defect >= -1e-12);
      REQUIRE(defect <= eta * std::pow(2.0, -level + 0.5));
    }
    CHECK(cover.covered_measure() == doctest::Approx(covered));
  }
}

TEST_CASE("hyperbola cover squares lie in the region") {
  const geometry::HyperbolaRegion h{50};
  const auto cover = discrepancy::dyadic_cover(h, 8);
  const u64 den = u64{1} << geometry::kCoverBits;
  for (int level = 1; level <= 8; ++level) {
    const i64 s = discrepancy::DyadicCover::side(level);
    for (const auto& run : cover.families[static_cast<std::size_t>(level - 1)]) {
      for (i64 u = run.u_begin; u < run.u_end; ++u) {
        const i64 x0 = cover.x0(level, u), y0 = cover.y0(level, run.v);
        for (i64 x : {x0, x0 + s}) {
          for (i64 y : {y0, y0 + s}) REQUIRE(h.contains(static_cast<u64>(x), static_cast<u64>(y), den));
        }
      }
    }
  }
  CHECK(cover.covered_measure() <= h.area());
  CHECK(cover.covered_measure() > 0.8 * h.area());
}

TEST_CASE("cover preconditions and limits") {
  std::mt19937_64 rng(1);
  const auto poly = geometry::random_convex_polygon(rng);
  CHECK_THROWS_AS(discrepancy::dyadic_cover(poly, 0), PreconditionError);
  CHECK_THROWS_AS(discrepancy::dyadic_cover(poly, 31), PreconditionError);
  CHECK_THROWS_AS(discrepancy::dyadic_cover(poly, 4, {-1, 0}), PreconditionError);
  CHECK_THROWS_AS(discrepancy::dyadic_cover(poly, 4, {i64{1} << 40, 0}), PreconditionError);
  CHECK_THROWS_AS(discrepancy::dyadic_cover(poly, 20, {}, {1000}), CapacityError);
}

TEST_CASE("convex counts") {
  const auto ps = pointset::generate(100);
  const auto s = discrepancy::Sample::from_pointset(ps);
  const auto pent = ConvexPolygon::from_points(
      std::vector<Point2>{{0.2, 0.1}, {0.8, 0.15}, {0.9, 0.6}, {0.5, 0.9}, {0.1, 0.5}});
  const auto r = discrepancy::convex_count(s, pent);
  u64 brute = 0;
  for (const auto& p : s.points()) brute += oracle::polygon_contains(grid_of(pent), p.xn, p.yn, p.den);
  CHECK(r.exact == brute);
  CHECK(r.cover_bound <= r.exact);
  CHECK(r.cover_measure <= r.area);
  const double n = static_cast<double>(s.size());
  // Points missed by the cover lie in a set of measure area - cover_measure.
  CHECK(static_cast<double>(r.exact - r.cover_bound) / n <= (r.area - r.cover_measure) + 0.05);

  const double e = 1e-6;
  const auto full = ConvexPolygon::from_points(std::vector<Point2>{{e, e}, {1 - e, e}, {1 - e, 1 - e}, {e, 1 - e}});
  CHECK(discrepancy::convex_count(s, full).exact >= static_cast<u64>(0.99 * n));
  const auto tiny = ConvexPolygon::from_points(
      std::vector<Point2>{{0.61, 0.37}, {0.61 + 1e-7, 0.37}, {0.61, 0.37 + 1e-7}});
  CHECK(discrepancy::convex_count(s, tiny).exact == 0);

  // The c = 1 point reduces to the origin, which lies outside the region.
  const geometry::HyperbolaRegion h{100};
  CHECK(discrepancy::count_in_region(s, h) == ps.size() - 91);
  const auto hc = discrepancy::dyadic_cover(h, 10);
  CHECK(discrepancy::cover_count(s, hc) <= discrepancy::count_in_region(s, h));
}
