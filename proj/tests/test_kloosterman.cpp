#include <doctest.h>

#include <cmath>
#include <random>

#include "modinv/arith.hpp"
#include "modinv/kloosterman.hpp"
#include "oracles/oracles.hpp"

using namespace modinv;
using kloosterman::Query;

namespace {

double phi_of(u64 c) { return static_cast<double>(oracle::phi(c)); }

}  // namespace

TEST_CASE("direct small values") {
  CHECK(kloosterman::direct({5, 7, 1}).value == 1.0);
  CHECK(std::fabs(kloosterman::direct({1, 1, 3}).value + 1.0) < 1e-12);
  CHECK(std::fabs(kloosterman::direct({1, 1, 4}).value + 2.0) < 1e-12);
  for (u64 c = 1; c <= 200; ++c) {
    REQUIRE(kloosterman::direct({0, 0, c}).value == phi_of(c));
  }
  CHECK(kloosterman::direct({1, 1, 7}).term_count == 6);
}

TEST_CASE("direct against the long double oracle") {
  for (u64 c = 1; c <= 60; ++c) {
    for (i64 m = -5; m <= 5; ++m) {
      for (i64 n = -5; n <= 5; ++n) {
        const double v = kloosterman::direct({m, n, c}).value;
        REQUIRE(std::fabs(v - oracle::kloosterman(m, n, c)) <= kloosterman::tolerance(c));
      }
    }
  }
}

TEST_CASE("fast agrees with direct") {
  const auto close = [](const Query& q) {
    return std::fabs(kloosterman::fast(q).value - kloosterman::direct(q).value) <=
           kloosterman::tolerance(q.c);
  };
  CHECK(close({1, 1, 12}));
  CHECK(close({2, 3, 35}));
  const auto prime = kloosterman::fast({1, 1, 101});
  CHECK(prime.method == kloosterman::Method::direct);
  CHECK(prime.value == kloosterman::direct({1, 1, 101}).value);
  CHECK(kloosterman::fast({1, 1, 12}).method == kloosterman::Method::crt_split);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Query q{static_cast<i64>(rng() % 2'000'001) - 1'000'000,
                  static_cast<i64>(rng() % 2'000'001) - 1'000'000, 5001 + rng() % 95'000};
    REQUIRE(close(q));
  }
}

TEST_CASE("direct respects the capacity limit") {
  kloosterman::Limits tight;
  tight.direct_cap = 100;
  CHECK_THROWS_AS(kloosterman::direct({1, 1, 1009}, tight), CapacityError);
  CHECK_NOTHROW(kloosterman::direct({1, 1, 97}, tight));
}

TEST_CASE("Ramanujan sums") {
  CHECK(std::fabs(kloosterman::ramanujan(1, 4)) < 1e-12);
  CHECK(std::fabs(kloosterman::ramanujan(1, 6) - 1.0) < 1e-12);
  CHECK(kloosterman::ramanujan(17, 1) == 1.0);
  for (u64 c = 1; c <= 120; ++c) {
    for (i64 n = -12; n <= 12; ++n) {
      REQUIRE(std::fabs(kloosterman::ramanujan(n, c) - oracle::kloosterman(0, n, c)) < 1e-9);
    }
  }
}

TEST_CASE("Weil bound formula") {
  CHECK(kloosterman::weil_bound({1, 1, 4}) == doctest::Approx(6.0));
  CHECK(kloosterman::weil_bound({2, 2, 4}) == doctest::Approx(std::sqrt(2.0) * 2.0 * 3.0));
  for (u64 c = 1; c <= 300; ++c) {
    REQUIRE(kloosterman::weil_bound({0, 0, c}) ==
            doctest::Approx(static_cast<double>(c * oracle::tau(c))));
    REQUIRE(kloosterman::weil_bound({0, 0, c}) >= phi_of(c));
  }
}

TEST_CASE("Weil bound holds on random queries") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10000; ++i) {
    const Query q{static_cast<i64>(rng() % 20001) - 10000, static_cast<i64>(rng() % 20001) - 10000,
                  1 + rng() % 10000};
    REQUIRE(std::fabs(kloosterman::fast(q).value) <= kloosterman::weil_bound(q) * (1.0 + 1e-9));
  }
}

TEST_CASE("Selberg rewrite") {
  const auto t = kloosterman::selberg_rewrite({2, 2, 4});
  REQUIRE(t.size() == 2);
  CHECK(t[0].d == 1);
  CHECK(t[0].query == Query{4, 1, 4});
  CHECK(t[1].d == 2);
  CHECK(t[1].query == Query{1, 1, 2});
  CHECK(std::fabs(kloosterman::direct({4, 1, 4}).value) < 1e-12);
  CHECK(std::fabs(2.0 * kloosterman::direct({1, 1, 2}).value - 2.0) < 1e-12);
  CHECK(std::fabs(kloosterman::direct({2, 2, 4}).value - 2.0) < 1e-12);
  CHECK(std::fabs(kloosterman::selberg_evaluate(t) - 2.0) < 1e-12);

  for (u64 c = 1; c <= 50; ++c) {
    const auto one = kloosterman::selberg_rewrite({1, 1, c});
    REQUIRE(one.size() == 1);
    REQUIRE(one[0].query == Query{1, 1, c});
  }
  const auto nine = kloosterman::selberg_rewrite({3, 3, 9});
  REQUIRE(nine.size() == 2);
  CHECK(nine[1].d == 3);
  CHECK(std::fabs(kloosterman::selberg_evaluate(nine) - kloosterman::direct({3, 3, 9}).value) <
        1e-8 * 9);

  CHECK_THROWS_AS(kloosterman::selberg_rewrite({0, 1, 5}), PreconditionError);
  CHECK_THROWS_AS(kloosterman::selberg_rewrite({-1, 1, 5}), PreconditionError);
}

TEST_CASE("realness of the defining sum") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10000; ++i) {
    const Query q{static_cast<i64>(rng() % 2001) - 1000, static_cast<i64>(rng() % 2001) - 1000,
                  1 + rng() % 2000};
    const auto z = kloosterman::direct_complex(q);
    REQUIRE(std::fabs(z.imag()) < 1e-9 * std::max(1.0, phi_of(q.c)));
    REQUIRE(std::fabs(z.real() - kloosterman::direct(q).value) <= kloosterman::tolerance(q.c));
  }
}

TEST_CASE("symmetries") {
  for (u64 c = 1; c <= 150; ++c) {
    for (i64 m = -6; m <= 6; ++m) {
      for (i64 n = -6; n <= 6; ++n) {
        const double s = kloosterman::direct({m, n, c}).value;
        const double tol = 1e-9 * std::max(1.0, phi_of(c));
        REQUIRE(std::fabs(s - kloosterman::direct({n, m, c}).value) <= tol);
        REQUIRE(std::fabs(s - kloosterman::direct({-m, -n, c}).value) <= tol);
      }
    }
  }
}

TEST_CASE("tables") {
  for (u64 c : {1u, 2u, 7u, 12u, 97u, 360u}) {
    const kloosterman::CosineTable cos(c);
    for (u64 k = 1; k < c; ++k) REQUIRE(cos[k] == cos[c - k]);
    const kloosterman::InverseTable inv(c);
    REQUIRE(inv.units().size() == oracle::phi(c));
    u64 prev = 0;
    for (const auto& u : inv.units()) {
      REQUIRE(u.a > prev);
      prev = u.a;
      REQUIRE(static_cast<u64>(u.inv) == oracle::inverse_by_search(u.a, c));
    }
  }
  CHECK(kloosterman::unit_cos(0, 4) == 1.0);
  CHECK(kloosterman::unit_cos(1, 4) == 0.0);
  CHECK(kloosterman::unit_cos(2, 4) == -1.0);
  CHECK(kloosterman::unit_cos(1, 3) == -0.5);
  CHECK(kloosterman::unit_sin(1, 4) == 1.0);
  CHECK(kloosterman::unit_sin(3, 4) == -1.0);
  CHECK(kloosterman::unit_sin(1, 12) == 0.5);
}
