#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "modinv/aggregate.hpp"
#include "modinv/pointset.hpp"
#include "modinv/reference.hpp"
#include "oracles/oracles.hpp"

using namespace modinv;
using geometry::Box;
using pointset::InversePair;

namespace {

std::vector<oracle::Triple> as_triples(const pointset::PointSet& ps) {
  std::vector<oracle::Triple> out;
  for (const auto& p : ps.points()) out.push_back({p.a, p.b, p.c});
  return out;
}

const double kAlmostOne = std::nextafter(1.0, 0.0);

}  // namespace

TEST_CASE("generate") {
  const auto one = pointset::generate(1);
  REQUIRE(one.size() == 1);
  CHECK(one.points()[0] == InversePair{1, 1, 1});
  CHECK(pointset::generate(10).size() == 32);
  CHECK(pointset::generate(600).size() == 109500);
  CHECK_THROWS_AS(pointset::generate(0), PreconditionError);
  CHECK_THROWS_AS(pointset::generate(600, {1000}), CapacityError);

  for (u64 X : {1u, 2u, 7u, 30u, 90u}) {
    const auto ps = pointset::generate(X);
    REQUIRE(as_triples(ps) == oracle::inverse_pairs(X));
    for (u64 c = 1; c <= X; ++c) {
      REQUIRE(ps.points()[ps.offset(c)].c == c);
    }
  }
}

TEST_CASE("order by first coordinate") {
  const auto ps = pointset::generate(80);
  const auto order = ps.order_by_x();
  REQUIRE(order.size() == ps.size());
  for (std::size_t i = 1; i < order.size(); ++i) {
    const auto& p = ps.points()[order[i - 1]];
    const auto& q = ps.points()[order[i]];
    REQUIRE(static_cast<u64>(p.a) * q.c < static_cast<u64>(q.a) * p.c);
  }
}

TEST_CASE("closure under inversion") {
  const auto ps = pointset::generate(150);
  std::set<std::tuple<u64, u64, u64>> all;
  for (const auto& p : ps.points()) all.insert({p.a, p.b, p.c});
  for (const auto& p : ps.points()) REQUIRE(all.count({p.b, p.a, p.c}) == 1);
}

TEST_CASE("weyl sums") {
  const auto ps100 = pointset::generate(100);
  const auto w00 = pointset::weyl_sum(ps100, 0, 0);
  CHECK(w00.real() == static_cast<double>(ps100.size()));
  CHECK(w00.imag() == 0.0);

  const auto w4 = pointset::weyl_sum(pointset::generate(4), 1, 1);
  CHECK(std::fabs(w4.real() + 1.0) < 1e-9);
  CHECK(std::fabs(w4.imag()) < 1e-9);

  const auto w = pointset::weyl_sum(ps100, 2, -3);
  const double want = aggregate::complete_sum_series(2, -3, 100).final_value();
  CHECK(std::fabs(w.real() - want) < 1e-9 * std::max(1.0, std::fabs(want)));
  CHECK(std::fabs(w.imag()) < 1e-9 * static_cast<double>(ps100.size()));

  const auto freqs = aggregate::signed_grid(2, 3);
  const auto par = pointset::weyl_sums(ps100, freqs);
  const auto ser = reference::weyl_sums(ps100, freqs);
  for (std::size_t k = 0; k < freqs.size(); ++k) REQUIRE(std::abs(par[k] - ser[k]) < 1e-9);
}

TEST_CASE("count_in_box structural examples") {
  for (u64 X : {9u, 100u, 400u}) {
    const auto ps = pointset::generate(X);
    const Box strip{0.0, 0.0, kAlmostOne, 1.0 / (2.0 * static_cast<double>(X))};
    CHECK(pointset::count_in_box(ps, strip) == 0);
  }
  const auto ps = pointset::generate(100);
  const Box corner{0.0, 0.0, 0.1, 0.1};
  CHECK(pointset::count_in_box(ps, corner) == 91);
  CHECK(oracle::box_count(as_triples(ps), 0.0, 0.0, 0.1, 0.1) == 91);
  // (0,1] representatives: a full box must start strictly inside (0, 1).
  const Box full{0.25, 0.25, kAlmostOne, kAlmostOne};
  CHECK(pointset::count_in_box(ps, full) == ps.size());
}

TEST_CASE("complementary boxes partition S(X)") {
  const auto ps = pointset::generate(100);
  const auto tr = as_triples(ps);
  const double s = 0.123456789, a = 0.5, gap = 1e-9;
  const Box left{s, 0.25, a, kAlmostOne};
  const Box right{s + a + gap, 0.25, 1.0 - a - 2 * gap, kAlmostOne};
  const u64 l = pointset::count_in_box(ps, left);
  const u64 r = pointset::count_in_box(ps, right);
  CHECK(l + r == ps.size());
  CHECK(l == oracle::box_count(tr, left.xi, left.zeta, left.alpha, left.beta));
  CHECK(r == oracle::box_count(tr, right.xi, right.zeta, right.alpha, right.beta));
}

TEST_CASE("count_in_box against brute force on random and grid-aligned boxes") {
  const auto ps = pointset::generate(60);
  const auto tr = as_triples(ps);
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1500; ++i) {
    Box b;
    if (i % 2 == 0) {
      b = {u(rng), u(rng), u(rng), u(rng)};
    } else {
      // Corners and ends on point coordinates exercise the closed boundaries.
      const auto pick = [&] {
        const u64 c = 1 + rng() % 60;
        return static_cast<double>(rng() % c) / static_cast<double>(c);
      };
      b = {pick(), pick(), pick(), pick()};
    }
    REQUIRE(pointset::count_in_box(ps, b) == oracle::box_count(tr, b.xi, b.zeta, b.alpha, b.beta));
  }
  CHECK_THROWS_AS(pointset::count_in_box(ps, {0.5, 0.5, 1.0, 0.2}), PreconditionError);
}

TEST_CASE("count_in_disc") {
  const auto ps = pointset::generate(500);
  CHECK(pointset::count_in_disc(ps, {{0.123, 0.456}, 0.0}) == 0);
  // (3/10, 7/10) is itself a point, so a closed radius-0 disc there holds it.
  CHECK(pointset::count_in_disc(ps, {{0.3, 0.7}, 0.0}) == 1);
  const double frac = static_cast<double>(pointset::count_in_disc(ps, {{0.5, 0.5}, 0.4999})) /
                      static_cast<double>(ps.size());
  CHECK(std::fabs(frac / (std::numbers::pi * 0.4999 * 0.4999) - 1.0) < 0.05);

  const auto small = pointset::generate(80);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const geometry::Disc d{{u(rng), u(rng)}, 0.49 * u(rng)};
    u64 brute = 0;
    for (const auto& p : small.points()) {
      const geometry::Point2 q{static_cast<double>(p.a % p.c) / p.c,
                               static_cast<double>(p.b % p.c) / p.c};
      brute += geometry::torus_distance_squared(q, d.center) <= d.radius * d.radius;
    }
    REQUIRE(pointset::count_in_disc(small, d) == brute);
  }
  // A tiny disc around (1/c, 1/c) holds only that hyperbola point.
  CHECK(pointset::count_in_disc(ps, {{1.0 / 300, 1.0 / 300}, 1e-6}) == 1);
}

TEST_CASE("min_pairwise_distance") {
  CHECK_THROWS_AS(pointset::min_pairwise_distance(pointset::generate(1)), PreconditionError);
  for (u64 X : {2u, 3u, 5u, 12u, 25u, 40u}) {
    const auto ps = pointset::generate(X);
    const auto cp = pointset::min_pairwise_distance(ps);
    const long double brute = oracle::min_distance_squared(as_triples(ps));
    REQUIRE(std::fabs(static_cast<long double>(cp.numerator) / static_cast<long double>(cp.denominator) -
                      brute) < 1e-15L);
    REQUIRE(std::fabs(cp.distance * cp.distance - static_cast<double>(brute)) < 1e-12);
    REQUIRE_FALSE(cp.first == cp.second);
  }
  const auto big = pointset::generate(300);
  const auto cp = pointset::min_pairwise_distance(big);
  CHECK(cp.distance > 0.0);
  CHECK(cp.distance < 1.0 / 300.0);
}

TEST_CASE("hyperbola points") {
  const auto h9 = pointset::hyperbola_points(pointset::generate(9));
  REQUIRE(h9.size() == 6);
  for (std::size_t i = 0; i < h9.size(); ++i) CHECK(h9[i] == InversePair{1, 1, static_cast<std::uint32_t>(4 + i)});
  CHECK(pointset::hyperbola_points(pointset::generate(1)).empty());
  CHECK(pointset::hyperbola_points(pointset::generate(100)).size() == 90);
  for (u64 X : {3u, 17u, 64u, 120u}) {
    const auto ps = pointset::generate(X);
    const auto found = pointset::hyperbola_points(ps);
    const auto brute = oracle::hyperbola_filter(oracle::inverse_pairs(X), X);
    REQUIRE(found.size() == brute.size());
    for (std::size_t i = 0; i < found.size(); ++i) {
      REQUIRE(oracle::Triple{found[i].a, found[i].b, found[i].c} == brute[i]);
    }
  }
}

TEST_CASE("csv and svg output") {
  for (auto [X, rows] : {std::pair<u64, std::size_t>{1, 1}, {10, 32}, {600, 109500}}) {
    std::ostringstream out;
    pointset::write_csv(out, pointset::generate(X));
    const std::string s = out.str();
    CHECK(s.rfind("a,b,c\n", 0) == 0);
    CHECK(static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')) == rows + 1);
  }
  std::ostringstream svg;
  pointset::write_svg(svg, pointset::generate(10));
  const std::string s = svg.str();
  CHECK(s.find("viewBox=\"0 0 1000 1000\"") != std::string::npos);
  std::size_t circles = 0;
  for (auto p = s.find("<circle"); p != std::string::npos; p = s.find("<circle", p + 1)) ++circles;
  CHECK(circles == 32);
  CHECK(s.find("r=\"0.5\"") != std::string::npos);
}

TEST_CASE("generate matches the serial reference") {
  for (u64 X : {1u, 50u, 333u}) {
    const auto a = pointset::generate(X);
    const auto b = reference::generate(X);
    REQUIRE(a.size() == b.size());
    REQUIRE(std::equal(a.points().begin(), a.points().end(), b.points().begin()));
  }
}
