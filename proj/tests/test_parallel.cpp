#include <doctest.h>

#include <random>

#include "modinv/aggregate.hpp"
#include "modinv/cover.hpp"
#include "modinv/discrepancy.hpp"
#include "modinv/pointset.hpp"
#include "modinv/reference.hpp"

using namespace modinv;

namespace {

// Runs f at 1 and 8 threads and restores the previous setting.
template <class F>
auto at_threads(int t, F&& f) {
  const int saved = thread_count();
  set_thread_count(t);
  auto out = f();
  set_thread_count(saved);
  return out;
}

}  // namespace

TEST_CASE("batched sums are bitwise identical across thread counts") {
  const auto pairs = aggregate::signed_grid(3, 3);
  for (auto backend : {aggregate::Backend::direct, aggregate::Backend::dft}) {
    aggregate::Options o;
    o.backend = backend;
    const auto f = [&] { return aggregate::batched_sums(pairs, 1, 700, aggregate::Weight::unit, o); };
    CHECK(at_threads(1, f) == at_threads(8, f));
    CHECK(at_threads(8, f) == at_threads(8, f));
  }
  const auto m = [] {
    const auto r = aggregate::second_moment(3, 150);
    return std::vector<double>{r.value, r.normalized};
  };
  CHECK(at_threads(1, m) == at_threads(8, m));
}

TEST_CASE("point set kernels are identical across thread counts") {
  const auto gen = [] {
    const auto ps = pointset::generate(700);
    return std::vector<pointset::InversePair>(ps.points().begin(), ps.points().end());
  };
  CHECK(at_threads(1, gen) == at_threads(8, gen));

  const auto ps = pointset::generate(300);
  const auto freqs = aggregate::signed_grid(2, 2);
  const auto w = [&] { return pointset::weyl_sums(ps, freqs); };
  CHECK(at_threads(1, w) == at_threads(8, w));
  const auto serial = reference::weyl_sums(ps, freqs);
  const auto par = at_threads(8, w);
  for (std::size_t k = 0; k < freqs.size(); ++k) CHECK(std::abs(par[k] - serial[k]) < 1e-9);

  const auto d = [&] { return pointset::count_in_disc(ps, {{0.2, 0.8}, 0.3}); };
  CHECK(at_threads(1, d) == at_threads(8, d));
  const auto cp = [&] {
    const auto r = pointset::min_pairwise_distance(ps);
    return std::vector<u64>{static_cast<u64>(r.numerator), static_cast<u64>(r.denominator), r.first.c,
                            r.first.a, r.second.c, r.second.a};
  };
  CHECK(at_threads(1, cp) == at_threads(8, cp));
}

TEST_CASE("searches are identical across thread counts") {
  const auto s = discrepancy::Sample::from_pointset(pointset::generate(120));
  const auto box = [&] {
    const auto r = discrepancy::box_discrepancy(s, discrepancy::BoxMode::search);
    return std::vector<double>{r.value, r.witness.xi, r.witness.zeta, r.witness.alpha, r.witness.beta};
  };
  CHECK(at_threads(1, box) == at_threads(8, box));
  const auto exact = [&] {
    const auto small = discrepancy::Sample::from_pointset(pointset::generate(40));
    const auto r = discrepancy::box_discrepancy(small, discrepancy::BoxMode::exact_small);
    return std::vector<double>{r.value, r.witness.xi, r.witness.zeta, r.witness.alpha, r.witness.beta};
  };
  CHECK(at_threads(1, exact) == at_threads(8, exact));
  const auto ball = [&] {
    const auto r = discrepancy::ball_discrepancy_search(s, 6);
    return std::vector<double>{r.value, r.witness.center.x, r.witness.center.y, r.witness.radius};
  };
  CHECK(at_threads(1, ball) == at_threads(8, ball));
  const auto cover = [&] {
    std::mt19937_64 rng(2);
    const auto poly = geometry::random_convex_polygon(rng);
    const auto c = discrepancy::dyadic_cover(poly, 12);
    std::vector<i64> flat;
    for (const auto& fam : c.families) {
      for (const auto& r : fam) flat.insert(flat.end(), {r.level, r.v, r.u_begin, r.u_end});
    }
    flat.push_back(static_cast<i64>(discrepancy::cover_count(s, c)));
    return flat;
  };
  CHECK(at_threads(1, cover) == at_threads(8, cover));
}
