#include "modinv/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

#include "modinv/aggregate.hpp"
#include "modinv/arith.hpp"
#include "modinv/cover.hpp"
#include "modinv/discrepancy.hpp"
#include "modinv/io.hpp"
#include "modinv/kloosterman.hpp"
#include "modinv/pointset.hpp"
#include "oracles/oracles.hpp"

namespace modinv::acceptance {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

aggregate::Options aggregate_options(const ExperimentConfig& cfg) {
  aggregate::Options o;
  o.term_budget = cfg.term_budget;
  return o;
}

pointset::Limits point_limits(const ExperimentConfig& cfg) { return {cfg.point_cap}; }

std::vector<aggregate::IntPair> square_frequencies(i64 bound) {
  std::vector<aggregate::IntPair> out;
  for (i64 a = -bound; a <= bound; ++a) {
    for (i64 b = -bound; b <= bound; ++b) out.push_back({a, b});
  }
  return out;
}

CriterionResult figure_count(const ExperimentConfig& cfg) {
  CriterionResult r{1, "point count N(600) = 109500", false, "", json::object()};
  const auto t0 = Clock::now();
  const auto ps = pointset::generate(600, point_limits(cfg));
  const double elapsed = seconds_since(t0);
  const u64 oracle = oracle::totient_prefix(600);
  r.data["count"] = ps.size();
  r.data["totient_prefix_oracle"] = oracle;
  r.passed = ps.size() == 109500 && oracle == 109500 && elapsed < 5.0;
  r.detail = "count " + std::to_string(ps.size()) + (elapsed < 5.0 ? "" : ", over 5 s");
  return r;
}

CriterionResult weil_suite(const ExperimentConfig& cfg) {
  CriterionResult r{2, "Weil bound suite", false, "", json::object()};
  const auto t0 = Clock::now();
  const double slack = 1.0 + cfg.tolerances.weil;
  u64 checked = 0, violations = 0;
  double worst = 0.0;

  std::vector<u64> bad_grid(501, 0);
  std::vector<double> worst_grid(501, 0.0);
#pragma omp parallel for schedule(dynamic, 4)
  for (u64 c = 1; c <= 500; ++c) {
    const kloosterman::InverseTable table(c);
    const kloosterman::CosineTable cosines(c);
    for (i64 m = -8; m <= 8; ++m) {
      for (i64 n = -8; n <= 8; ++n) {
        const double s = kloosterman::direct_sum(m, n, table, cosines);
        const double bound = kloosterman::weil_bound({m, n, c});
        worst_grid[c] = std::max(worst_grid[c], std::fabs(s) / bound);
        if (std::fabs(s) > bound * slack) ++bad_grid[c];
      }
    }
  }
  for (u64 c = 1; c <= 500; ++c) {
    violations += bad_grid[c];
    worst = std::max(worst, worst_grid[c]);
  }
  checked += 500 * 17 * 17;

  std::mt19937_64 rng(cfg.seed);
  std::vector<kloosterman::Query> queries;
  for (int i = 0; i < 10000; ++i) {
    const u64 c = 1 + rng() % 10000;
    const i64 m = static_cast<i64>(rng() % 2000001) - 1000000;
    const i64 n = static_cast<i64>(rng() % 2000001) - 1000000;
    queries.push_back({m, n, c});
  }
  std::vector<double> ratios(queries.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::size_t i = 0; i < queries.size(); ++i) {
    ratios[i] = std::fabs(kloosterman::fast(queries[i]).value) / kloosterman::weil_bound(queries[i]);
  }
  for (double q : ratios) {
    worst = std::max(worst, q);
    if (q > slack) ++violations;
  }
  checked += queries.size();
  const double elapsed = seconds_since(t0);
  r.data["checked"] = checked;
  r.data["violations"] = violations;
  r.data["max_ratio_to_bound"] = worst;
  r.passed = violations == 0 && elapsed < 60.0;
  r.detail = std::to_string(violations) + " violations in " + std::to_string(checked) +
             " sums, max |S|/bound " + io::format_double(worst) + (elapsed < 60.0 ? "" : ", over 60 s");
  return r;
}

CriterionResult oracle_equivalence(const ExperimentConfig& cfg) {
  CriterionResult r{3, "fast/direct and Selberg equivalence", false, "", json::object()};
  const std::vector<i64> small = {1, 2, 3, 5};
  std::vector<u64> bad(5001, 0);
  std::vector<double> worst(5001, 0.0);
#pragma omp parallel for schedule(dynamic, 8)
  for (u64 c = 1; c <= 5000; ++c) {
    const double tol = cfg.tolerances.fast_direct *
                       std::max(1.0, std::sqrt(static_cast<double>(c)) *
                                         static_cast<double>(arith::divisor_count(c)));
    const kloosterman::InverseTable table(c);
    const kloosterman::CosineTable cosines(c);
    for (i64 m : small) {
      for (i64 n : small) {
        const double d = kloosterman::direct_sum(m, n, table, cosines);
        const double f = kloosterman::fast({m, n, c}).value;
        const double err = std::fabs(d - f);
        worst[c] = std::max(worst[c], err / tol);
        if (err > tol) ++bad[c];
      }
    }
  }
  u64 fast_bad = 0;
  double fast_worst = 0.0;
  for (u64 c = 1; c <= 5000; ++c) {
    fast_bad += bad[c];
    fast_worst = std::max(fast_worst, worst[c]);
  }

  u64 selberg_bad = 0;
  double selberg_worst = 0.0;
  for (i64 m = 1; m <= 6; ++m) {
    for (i64 n = 1; n <= 6; ++n) {
      for (u64 c = 1; c <= 300; ++c) {
        const kloosterman::Query q{m, n, c};
        const double lhs = kloosterman::direct(q).value;
        const double rhs = kloosterman::selberg_evaluate(kloosterman::selberg_rewrite(q));
        const double tol = cfg.tolerances.selberg * static_cast<double>(c);
        selberg_worst = std::max(selberg_worst, std::fabs(lhs - rhs) / tol);
        if (std::fabs(lhs - rhs) > tol) ++selberg_bad;
      }
    }
  }
  r.data["fast_direct_checked"] = 5000 * small.size() * small.size();
  r.data["fast_direct_violations"] = fast_bad;
  r.data["fast_direct_worst_error_over_tolerance"] = fast_worst;
  r.data["selberg_checked"] = 6 * 6 * 300;
  r.data["selberg_violations"] = selberg_bad;
  r.data["selberg_worst_error_over_tolerance"] = selberg_worst;
  r.passed = fast_bad == 0 && selberg_bad == 0;
  r.detail = std::to_string(fast_bad) + " fast/direct and " + std::to_string(selberg_bad) +
             " Selberg violations";
  return r;
}

CriterionResult keystone(const ExperimentConfig& cfg) {
  CriterionResult r{4, "Weyl sums equal complete Kloosterman sums", false, "", json::object()};
  const auto t0 = Clock::now();
  const auto freqs = square_frequencies(8);
  u64 violations = 0;
  double worst = 0.0;
  json per_x = json::array();
  for (u64 X : {50u, 100u, 200u}) {
    const auto ps = pointset::generate(X, point_limits(cfg));
    const auto weyl = pointset::weyl_sums(ps, freqs);
    const auto sums = aggregate::batched_sums(freqs, 1, X, aggregate::Weight::unit,
                                              aggregate_options(cfg));
    double worst_x = 0.0;
    for (std::size_t f = 0; f < freqs.size(); ++f) {
      const double scale = std::max(1.0, std::fabs(sums[f]));
      const double err = std::abs(weyl[f] - std::complex<double>(sums[f], 0.0)) / scale;
      worst_x = std::max(worst_x, err);
      if (err > cfg.tolerances.keystone) ++violations;
    }
    worst = std::max(worst, worst_x);
    per_x.push_back({{"X", X}, {"max_relative_error", worst_x}});
  }
  const double elapsed = seconds_since(t0);
  r.data["frequencies"] = freqs.size();
  r.data["per_X"] = per_x;
  r.data["violations"] = violations;
  r.passed = violations == 0 && elapsed < 120.0;
  r.detail = std::to_string(violations) + " violations, max relative error " +
             io::format_double(worst) + (elapsed < 120.0 ? "" : ", over 120 s");
  return r;
}

CriterionResult hyperbola_structure(const ExperimentConfig& cfg) {
  CriterionResult r{5, "points below the hyperbola", true, "", json::object()};
  json per_x = json::array();
  for (u64 X : {9u, 100u, 400u}) {
    const auto ps = pointset::generate(X, point_limits(cfg));
    const auto found = pointset::hyperbola_points(ps);
    std::vector<pointset::InversePair> expected;
    for (u64 c = 1; c <= X; ++c) {
      if (c * c > X) {
        expected.push_back({1, 1, static_cast<std::uint32_t>(c)});
      }
    }
    const auto all = oracle::inverse_pairs(X);
    const auto brute = oracle::hyperbola_filter(all, X);
    bool oracle_match = brute.size() == found.size();
    for (std::size_t i = 0; oracle_match && i < brute.size(); ++i) {
      oracle_match = brute[i].a == found[i].a && brute[i].b == found[i].b && brute[i].c == found[i].c;
    }
    const geometry::Box strip{0.0, 0.0, std::nextafter(1.0, 0.0), 1.0 / (2.0 * static_cast<double>(X))};
    const u64 strip_count = pointset::count_in_box(ps, strip);
    const u64 strip_oracle = oracle::box_count(all, strip.xi, strip.zeta, strip.alpha, strip.beta);
    const bool ok = found == expected && oracle_match && strip_count == 0 && strip_oracle == 0 &&
                    all.size() == ps.size();
    r.passed = r.passed && ok;
    per_x.push_back({{"X", X},
                     {"hyperbola_points", found.size()},
                     {"expected", expected.size()},
                     {"matches_brute_force", oracle_match},
                     {"strip_count", strip_count}});
  }
  r.data["per_X"] = per_x;
  r.detail = r.passed ? "exact structure at X = 9, 100, 400" : "structure mismatch";
  return r;
}

CriterionResult hyperbola_floor(const ExperimentConfig& cfg) {
  CriterionResult r{6, "hyperbola-complement discrepancy floor", true, "", json::object()};
  json per_x = json::array();
  std::string failing;
  for (u64 X : {50u, 100u, 200u, 400u}) {
    const auto ps = pointset::generate(X, point_limits(cfg));
    const auto b = discrepancy::hyperbola_convex_lower_bound(ps, 2.0);
    const bool ok = b.measured >= b.floor;
    if (!ok) failing += (failing.empty() ? "" : ", ") + std::to_string(X);
    r.passed = r.passed && ok;
    per_x.push_back({{"X", X},
                     {"count", b.count},
                     {"area", b.area},
                     {"measured", b.measured},
                     {"floor", b.floor},
                     {"implied_constant", std::log(static_cast<double>(X)) -
                                              static_cast<double>(X) * b.measured}});
  }
  r.data["slack_constant"] = 2.0;
  r.data["per_X"] = per_x;
  r.detail = r.passed ? "measured >= (ln X - 2)/X for all X" : "below the floor at X = " + failing;
  return r;
}

CriterionResult box_envelope(const ExperimentConfig& cfg) {
  CriterionResult r{7, "box discrepancy times X^(5/6) bounded", false, "", json::object()};
  json per_x = json::array();
  double worst = 0.0;
  discrepancy::BoxOptions options;
  options.exact_cap = cfg.exact_cap;
  for (u64 X : {25u, 50u, 100u, 200u, 400u}) {
    const auto ps = pointset::generate(X, point_limits(cfg));
    const auto sample = discrepancy::Sample::from_pointset(ps);
    const auto mode = sample.size() <= options.exact_cap ? discrepancy::BoxMode::exact_small
                                                         : discrepancy::BoxMode::search;
    const auto res = discrepancy::box_discrepancy(sample, mode, options);
    const double scaled = res.value * std::pow(static_cast<double>(X), 5.0 / 6.0);
    worst = std::max(worst, scaled);
    per_x.push_back({{"X", X},
                     {"mode", discrepancy::to_string(mode)},
                     {"value", res.value},
                     {"scaled", scaled},
                     {"open", res.open},
                     {"witness", {res.witness.xi, res.witness.zeta, res.witness.alpha,
                                  res.witness.beta}}});
  }
  r.data["per_X"] = per_x;
  r.data["max_scaled"] = worst;
  r.data["frozen_constant"] = kBoxEnvelopeConstant;
  r.passed = worst <= kBoxEnvelopeConstant;
  r.detail = "max D*X^(5/6) = " + io::format_double(worst) + " vs frozen " +
             io::format_double(kBoxEnvelopeConstant);
  return r;
}

CriterionResult cover_invariants(const ExperimentConfig& cfg) {
  CriterionResult r{8, "dyadic cover invariants", false, "", json::object()};
  const auto t0 = Clock::now();
  constexpr int kDepth = 12;
  const double eta = 4.0 + std::numbers::pi;
  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  u64 containment = 0, nesting = 0, count_bound = 0, defect_bound = 0, squares = 0;
  double worst_count_ratio = 0.0, worst_defect_ratio = 0.0;
  for (int k = 0; k < 50; ++k) {
    const auto poly = geometry::random_convex_polygon(rng, 4 + k % 12);
    std::vector<oracle::GridVertex> verts;
    for (const auto& v : poly.grid_vertices()) verts.push_back({v.x, v.y});
    const auto cover = discrepancy::dyadic_cover(poly, kDepth);
    const auto inside = [&](int level, i64 u, i64 v) {
      const i64 s = discrepancy::DyadicCover::side(level);
      const i64 x0 = cover.x0(level, u), y0 = cover.y0(level, v);
      if (x0 < 0 || y0 < 0) return false;
      const u64 den = u64{1} << geometry::kCoverBits;
      for (i64 x : {x0, x0 + s}) {
        for (i64 y : {y0, y0 + s}) {
          if (!oracle::polygon_contains(verts, static_cast<u64>(x), static_cast<u64>(y), den)) {
            return false;
          }
        }
      }
      return true;
    };
    for (int level = 1; level <= kDepth; ++level) {
      for (const auto& run : cover.families[static_cast<std::size_t>(level - 1)]) {
        for (i64 u = run.u_begin; u < run.u_end; ++u) {
          ++squares;
          if (!inside(level, u, run.v)) ++containment;
          if (level > 1 && inside(level - 1, u >> 1, run.v >> 1)) ++nesting;
        }
      }
      const double size = static_cast<double>(cover.family_size(level));
      const double cap = eta * std::pow(2.0, level + 1.5);
      worst_count_ratio = std::max(worst_count_ratio, size / cap);
      if (size > cap) ++count_bound;
    }
    double covered = 0.0;
    for (int M = 1; M <= kDepth; ++M) {
      covered += cover.family_measure(M);
      const double defect = poly.area() - covered;
      const double cap = eta * std::pow(2.0, -M + 0.5);
      worst_defect_ratio = std::max(worst_defect_ratio, defect / cap);
      if (defect < -1e-12 || defect > cap) ++defect_bound;
    }
  }
  const double elapsed = seconds_since(t0);
  r.data["polygons"] = 50;
  r.data["depth"] = kDepth;
  r.data["squares"] = squares;
  r.data["containment_violations"] = containment;
  r.data["nesting_violations"] = nesting;
  r.data["count_bound_violations"] = count_bound;
  r.data["defect_bound_violations"] = defect_bound;
  r.data["max_count_over_bound"] = worst_count_ratio;
  r.data["max_defect_over_bound"] = worst_defect_ratio;
  const u64 total = containment + nesting + count_bound + defect_bound;
  r.passed = total == 0 && elapsed < 60.0;
  r.detail = std::to_string(total) + " violations over " + std::to_string(squares) + " squares" +
             (elapsed < 60.0 ? "" : ", over 60 s");
  return r;
}

std::vector<oracle::FracPoint> to_oracle(const discrepancy::Sample& s) {
  std::vector<oracle::FracPoint> out;
  for (const auto& p : s.points()) out.push_back({p.xn, p.yn, p.den});
  return out;
}

CriterionResult box_oracle(const ExperimentConfig& cfg) {
  CriterionResult r{9, "exact box discrepancy equals brute force", false, "", json::object()};
  std::vector<discrepancy::Sample> sets;
  for (u64 X = 1; X <= 12; ++X) {
    sets.push_back(discrepancy::Sample::from_pointset(pointset::generate(X)));
  }
  std::mt19937_64 rng(cfg.seed + 9);
  const auto full = discrepancy::Sample::from_pointset(pointset::generate(12));
  for (int k = 0; k < 10; ++k) {
    std::vector<std::size_t> idx(full.size());
    std::iota(idx.begin(), idx.end(), 0u);
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(5 + static_cast<std::size_t>(rng() % (full.size() - 5)));
    std::sort(idx.begin(), idx.end());
    sets.push_back(discrepancy::subset(full, idx));
  }
  for (int k = 0; k < 20; ++k) {
    sets.push_back(discrepancy::random_baseline(1 + rng() % 60, cfg.seed + 100 + k));
  }
  u64 mismatches = 0;
  double worst = 0.0;
  json rows = json::array();
  for (const auto& s : sets) {
    const auto res = discrepancy::box_discrepancy(s, discrepancy::BoxMode::exact_small);
    const auto pts = to_oracle(s);
    const auto brute = oracle::box_discrepancy(pts);
    u64 witness_count = 0;
    const double witness_value =
        oracle::box_value(pts, {res.x.lo.num, res.x.lo.den}, {res.x.hi.num, res.x.hi.den},
                          {res.y.lo.num, res.y.lo.den}, {res.y.hi.num, res.y.hi.den}, res.open,
                          &witness_count);
    const double err = std::max(std::fabs(res.value - brute.value), std::fabs(witness_value - res.value));
    worst = std::max(worst, err);
    const bool ok = err <= cfg.tolerances.box_oracle && witness_count == res.count;
    if (!ok) ++mismatches;
    rows.push_back({{"points", s.size()}, {"value", res.value}, {"oracle", brute.value}});
  }
  r.data["sets"] = sets.size();
  r.data["mismatches"] = mismatches;
  r.data["max_error"] = worst;
  r.data["rows"] = rows;
  r.passed = mismatches == 0;
  r.detail = std::to_string(mismatches) + " mismatches over " + std::to_string(sets.size()) +
             " point sets, max error " + io::format_double(worst);
  return r;
}

CriterionResult determinism(const ExperimentConfig& cfg) {
  CriterionResult r{10, "determinism across thread counts and runs", false, "", json::object()};
  const int saved = thread_count();
  std::vector<std::string> runs;
  for (int t : {1, 8, 8}) {
    set_thread_count(t);
    runs.push_back(io::dump_json(determinism_probe(cfg)));
  }
  set_thread_count(saved);
  const bool threads_equal = runs[0] == runs[1];
  const bool repeat_equal = runs[1] == runs[2];
  r.data["threads_1_vs_8_identical"] = threads_equal;
  r.data["repeat_identical"] = repeat_equal;
  r.data["probe_bytes"] = runs[0].size();
  r.passed = threads_equal && repeat_equal;
  r.detail = r.passed ? "kernel outputs byte-identical at 1 and 8 threads"
                      : "kernel outputs differ between runs";
  return r;
}

CriterionResult moment_crosscheck(const ExperimentConfig& cfg) {
  CriterionResult r{11, "second moment equals brute force", false, "", json::object()};
  u64 violations = 0, checked = 0;
  double worst = 0.0;
  for (u64 N = 1; N <= 4; ++N) {
    for (u64 X = 1; X <= 30; ++X) {
      const auto m = aggregate::second_moment(N, X, aggregate_options(cfg));
      const double ref = oracle::second_moment(N, X);
      const double ref_norm = oracle::second_moment_normalized(N, X);
      const double e1 = std::fabs(m.value - ref) / std::max(1.0, std::fabs(ref));
      const double e2 = std::fabs(m.normalized - ref_norm) / std::max(1.0, std::fabs(ref_norm));
      worst = std::max({worst, e1, e2});
      if (e1 > cfg.tolerances.moment || e2 > cfg.tolerances.moment) ++violations;
      ++checked;
    }
  }
  r.data["checked"] = checked;
  r.data["violations"] = violations;
  r.data["max_relative_error"] = worst;
  r.passed = violations == 0;
  r.detail = std::to_string(violations) + " violations in " + std::to_string(checked) +
             " (N, X), max relative error " + io::format_double(worst);
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, const ExperimentConfig& config) {
  switch (id) {
    case 1: return figure_count(config);
    case 2: return weil_suite(config);
    case 3: return oracle_equivalence(config);
    case 4: return keystone(config);
    case 5: return hyperbola_structure(config);
    case 6: return hyperbola_floor(config);
    case 7: return box_envelope(config);
    case 8: return cover_invariants(config);
    case 9: return box_oracle(config);
    case 10: return determinism(config);
    case 11: return moment_crosscheck(config);
    default: throw PreconditionError("run_criterion: id must be in [1, 11]");
  }
}

bool Report::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

nlohmann::ordered_json Report::to_json(const ExperimentConfig& config) const {
  json out;
  out["schema"] = "modinv-report/1";
  out["config"] = {{"term_budget", config.term_budget},
                   {"point_cap", config.point_cap},
                   {"exact_cap", config.exact_cap},
                   {"seed", config.seed},
                   {"tolerances",
                    {{"weil", config.tolerances.weil},
                     {"fast_direct", config.tolerances.fast_direct},
                     {"selberg", config.tolerances.selberg},
                     {"keystone", config.tolerances.keystone},
                     {"moment", config.tolerances.moment},
                     {"box_oracle", config.tolerances.box_oracle}}}};
  json criteria = json::array();
  for (const auto& r : results) {
    criteria.push_back({{"id", r.id},
                        {"name", r.name},
                        {"passed", r.passed},
                        {"detail", r.detail},
                        {"data", r.data}});
  }
  out["criteria"] = criteria;
  out["all_passed"] = all_passed();
  return out;
}

Report run_all(const ExperimentConfig& config) {
  Report report;
  for (int id = 1; id <= kCriterionCount; ++id) report.results.push_back(run_criterion(id, config));
  return report;
}

nlohmann::ordered_json determinism_probe(const ExperimentConfig& config) {
  json out;
  const auto opts = aggregate_options(config);
  const auto grid = aggregate::triple_sum(2, 2, 300, opts);
  json entries = json::array();
  for (const auto& e : grid.entries) entries.push_back(e.abs_sum);
  out["triple_total"] = grid.total;
  out["triple_entries"] = entries;
  const auto moment = aggregate::second_moment(4, 200, opts);
  out["moment"] = {moment.value, moment.normalized};
  aggregate::Options dft = opts;
  dft.backend = aggregate::Backend::dft;
  const std::vector<aggregate::IntPair> pairs = {{1, 1}, {3, -2}, {-5, 7}};
  const auto via_dft = aggregate::batched_sums(pairs, 1, 300, aggregate::Weight::unit, dft);
  out["dft_sums"] = via_dft;

  const auto ps = pointset::generate(150, point_limits(config));
  const std::vector<aggregate::IntPair> freqs = {{1, 0}, {2, -3}, {4, 4}};
  json weyl = json::array();
  for (const auto& w : pointset::weyl_sums(ps, freqs)) weyl.push_back({w.real(), w.imag()});
  out["weyl"] = weyl;
  out["disc_count"] = pointset::count_in_disc(ps, {{0.3, 0.6}, 0.2});

  const auto sample = discrepancy::Sample::from_pointset(ps);
  discrepancy::BoxOptions box_opts;
  box_opts.seed_grid = 8;
  const auto box = discrepancy::box_discrepancy(sample, discrepancy::BoxMode::search, box_opts);
  out["box_search"] = {box.value, box.witness.xi, box.witness.zeta, box.witness.alpha,
                       box.witness.beta};
  const auto ball = discrepancy::ball_discrepancy_search(sample, 6);
  out["ball_search"] = {ball.value, ball.witness.center.x, ball.witness.center.y,
                        ball.witness.radius};

  std::mt19937_64 rng(config.seed);
  const auto poly = geometry::random_convex_polygon(rng, 10);
  const auto cc = discrepancy::convex_count(sample, poly, 10);
  out["convex"] = {cc.exact, cc.cover_bound, cc.cover_measure};
  return out;
}

}  // namespace modinv::acceptance
