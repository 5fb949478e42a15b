// modinv: command-line driver for the Kloosterman, point-set and
// discrepancy experiments.
//
// Exit codes: 0 ok, 1 acceptance failure, 2 capacity, 3 usage or precondition.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "modinv/acceptance.hpp"
#include "modinv/aggregate.hpp"
#include "modinv/config.hpp"
#include "modinv/cover.hpp"
#include "modinv/discrepancy.hpp"
#include "modinv/io.hpp"
#include "modinv/kloosterman.hpp"
#include "modinv/pointset.hpp"
#include "oracles/oracles.hpp"

namespace {

using namespace modinv;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitAcceptance = 1;
constexpr int kExitCapacity = 2;
constexpr int kExitUsage = 3;

// Largest sample for which `disc box` re-runs the brute-force oracle.
constexpr std::size_t kOracleBoxLimit = 64;
// Largest X for which `disc hyperbola` and `disc convex` recount by brute force.
constexpr u64 kOracleCountLimit = 200;

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot open output file '" + path + "'");
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

aggregate::Backend parse_backend(const std::string& s) {
  return s == "dft" ? aggregate::Backend::dft : aggregate::Backend::direct;
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
  i64 m = 0;
  i64 n = 0;
  u64 c = 1;
  std::string method = "fast";
};

int cmd_eval(const EvalArgs& a) {
  const kloosterman::Query q{a.m, a.n, a.c};
  const auto v = a.method == "direct" ? kloosterman::direct(q) : kloosterman::fast(q);
  json out;
  out["m"] = q.m;
  out["n"] = q.n;
  out["c"] = q.c;
  out["value"] = v.value;
  out["method"] = v.method == kloosterman::Method::direct ? "direct" : "crt_split";
  out["term_count"] = v.term_count;
  out["weil_bound"] = kloosterman::weil_bound(q);
  emit(io::dump_json(out) + "\n", "");
  return kExitOk;
}

// ---------------------------------------------------------------- scan

struct ScanArgs {
  std::string kind;
  i64 m = 1;
  i64 n = 1;
  std::vector<u64> M{1};
  std::vector<u64> N{1};
  std::vector<u64> X{1};
  std::string backend = "direct";
  u64 term_budget = 1'000'000'000;
  std::string out;
};

int cmd_scan(const ScanArgs& a) {
  aggregate::Options opts;
  opts.backend = parse_backend(a.backend);
  opts.term_budget = a.term_budget;
  if (a.kind == "sum") {
    if (a.X.size() != 1) throw PreconditionError("scan sum takes a single --X");
    emit(io::series_csv(aggregate::complete_sum_series(a.m, a.n, a.X.front(), opts)), a.out);
    return kExitOk;
  }
  std::vector<aggregate::RatioQuery> grid;
  const auto kind = a.kind == "triple"    ? aggregate::RatioKind::triple
                    : a.kind == "moment2" ? aggregate::RatioKind::moment2
                                          : aggregate::RatioKind::linnik;
  if (kind == aggregate::RatioKind::linnik) {
    if (a.m < 1 || a.n < 1) throw PreconditionError("scan linnik needs --m, --n >= 1");
    for (u64 X : a.X) grid.push_back({kind, static_cast<u64>(a.m), static_cast<u64>(a.n), X});
  } else {
    const std::vector<u64> Ms = kind == aggregate::RatioKind::moment2 ? std::vector<u64>{1} : a.M;
    for (u64 M : Ms) {
      for (u64 N : a.N) {
        for (u64 X : a.X) grid.push_back({kind, M, N, X});
      }
    }
  }
  emit(aggregate::ratio_csv(aggregate::bound_ratio_report(grid, opts)), a.out);
  return kExitOk;
}

// ---------------------------------------------------------------- points

struct PointsArgs {
  u64 X = 1;
  u64 point_cap = 8'000'000;
  CLI::Option* csv = nullptr;
  CLI::Option* svg = nullptr;
  std::string csv_path;
  std::string svg_path;
};

int cmd_points(const PointsArgs& a) {
  if (a.csv->count() == 0 && a.svg->count() == 0) {
    throw PreconditionError("points: give --csv and/or --svg");
  }
  if (a.csv->count() > 0 && a.svg->count() > 0 && (a.csv_path.empty() || a.csv_path == "-") &&
      (a.svg_path.empty() || a.svg_path == "-")) {
    throw PreconditionError("points: --csv and --svg cannot both write to stdout");
  }
  const auto ps = pointset::generate(a.X, {a.point_cap});
  if (a.csv->count() > 0) {
    std::ostringstream ss;
    pointset::write_csv(ss, ps);
    emit(ss.str(), a.csv_path);
  }
  if (a.svg->count() > 0) {
    std::ostringstream ss;
    pointset::write_svg(ss, ps);
    emit(ss.str(), a.svg_path);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- disc

struct DiscArgs {
  std::string kind;
  u64 X = 0;
  u64 random = 0;
  u64 seed = 20240601;
  u64 point_cap = 8'000'000;
  std::string mode = "exact-small";
  u64 exact_cap = 1000;
  int seed_grid = 16;
  int seeds = 16;
  std::string polygon;
  int depth = 10;
  double slack = 2.0;
  u64 M = 1;
  std::vector<double> box;
  u64 L1 = 2;
  u64 L2 = 2;
  std::vector<double> center;
  double radius = 0.1;
  double L = 1.0;
  std::string out;
};

discrepancy::Sample load_sample(const DiscArgs& a, std::optional<pointset::PointSet>& ps) {
  if (a.random > 0) return discrepancy::random_baseline(a.random, a.seed);
  if (a.X == 0) throw PreconditionError("disc: give --X or --random");
  ps = pointset::generate(a.X, {a.point_cap});
  return discrepancy::Sample::from_pointset(*ps);
}

json box_json(const geometry::Box& b) {
  return {{"xi", b.xi}, {"zeta", b.zeta}, {"alpha", b.alpha}, {"beta", b.beta}};
}

json arc_json(const discrepancy::Arc& arc) {
  return {{"lo", {arc.lo.num, arc.lo.den}}, {"hi", {arc.hi.num, arc.hi.den}}, {"open", arc.open}};
}

json disc_json(const geometry::Disc& d) {
  return {{"center", {d.center.x, d.center.y}}, {"radius", d.radius}};
}

geometry::ConvexPolygon read_polygon(const std::string& path) {
  const auto doc = json::parse(read_file(path), nullptr, false);
  if (doc.is_discarded() || !doc.is_array()) {
    throw PreconditionError("polygon file must hold a JSON array of [x, y] pairs");
  }
  std::vector<geometry::Point2> pts;
  for (const auto& v : doc) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw PreconditionError("polygon file must hold a JSON array of [x, y] pairs");
    }
    pts.push_back({v[0].get<double>(), v[1].get<double>()});
  }
  return geometry::ConvexPolygon::from_points(pts);
}

std::vector<oracle::FracPoint> oracle_points(const discrepancy::Sample& s) {
  std::vector<oracle::FracPoint> out;
  for (const auto& p : s.points()) out.push_back({p.xn, p.yn, p.den});
  return out;
}

[[noreturn]] void oracle_mismatch(const std::string& what) {
  throw std::runtime_error("oracle disagreement: " + what);
}

int cmd_disc(const DiscArgs& a) {
  std::optional<pointset::PointSet> ps;
  json params;
  if (a.random > 0) {
    params["random"] = a.random;
    params["seed"] = a.seed;
  } else {
    params["X"] = a.X;
  }
  json report;
  report["operation"] = a.kind;
  bool checked = false;

  if (a.kind == "hyperbola") {
    if (a.random > 0) throw PreconditionError("disc hyperbola needs --X");
    ps = pointset::generate(a.X, {a.point_cap});
    const auto b = discrepancy::hyperbola_convex_lower_bound(*ps, a.slack);
    params["slack"] = a.slack;
    report["params"] = params;
    report["value"] = b.measured;
    report["witness"] = {{"region", "complement of x y < 1/X"},
                         {"count", b.count},
                         {"area", b.area},
                         {"floor", b.floor},
                         {"meets_floor", b.measured >= b.floor}};
    if (a.X <= kOracleCountLimit) {
      const auto all = oracle::inverse_pairs(a.X);
      const u64 below = oracle::hyperbola_filter(all, a.X).size();
      if (all.size() - below != b.count) oracle_mismatch("hyperbola complement count");
      checked = true;
    }
  } else {
    const auto sample = load_sample(a, ps);
    params["points"] = sample.size();
    if (a.kind == "box") {
      discrepancy::BoxOptions opts;
      opts.exact_cap = a.exact_cap;
      opts.seed_grid = a.seed_grid;
      if (a.mode != "exact-small" && a.mode != "search") {
        throw PreconditionError("--mode must be exact-small or search");
      }
      const auto mode =
          a.mode == "search" ? discrepancy::BoxMode::search : discrepancy::BoxMode::exact_small;
      const auto r = discrepancy::box_discrepancy(sample, mode, opts);
      params["mode"] = a.mode;
      report["params"] = params;
      report["value"] = r.value;
      report["lower_bound"] = r.lower_bound;
      report["witness"] = {{"box", box_json(r.witness)},
                           {"x", arc_json(r.x)},
                           {"y", arc_json(r.y)},
                           {"open", r.open},
                           {"count", r.count}};
      if (mode == discrepancy::BoxMode::exact_small && sample.size() <= kOracleBoxLimit) {
        const auto brute = oracle::box_discrepancy(oracle_points(sample));
        if (std::fabs(brute.value - r.value) > 1e-12) oracle_mismatch("box discrepancy");
        checked = true;
      }
    } else if (a.kind == "ball") {
      const auto r = discrepancy::ball_discrepancy_search(sample, a.seeds);
      params["seeds"] = a.seeds;
      report["params"] = params;
      report["value"] = r.value;
      report["lower_bound"] = true;
      report["witness"] = {{"disc", disc_json(r.witness)}, {"open", r.open}, {"count", r.count}};
    } else if (a.kind == "convex") {
      if (a.polygon.empty()) throw PreconditionError("disc convex needs --polygon FILE");
      const auto poly = read_polygon(a.polygon);
      const auto r = discrepancy::convex_count(sample, poly, a.depth);
      const double n = static_cast<double>(sample.size());
      json verts = json::array();
      for (const auto& v : poly.vertices()) verts.push_back({v.x, v.y});
      params["depth"] = a.depth;
      report["params"] = params;
      report["value"] = std::fabs(static_cast<double>(r.exact) / n - r.area);
      report["witness"] = {{"polygon", verts},
                           {"count", r.exact},
                           {"area", r.area},
                           {"cover_count", r.cover_bound},
                           {"cover_measure", r.cover_measure}};
      // Reporting-only comparison with the square root of the box discrepancy.
      discrepancy::BoxOptions box_opts;
      box_opts.exact_cap = a.exact_cap;
      const auto box = discrepancy::box_discrepancy(
          sample,
          sample.size() <= a.exact_cap ? discrepancy::BoxMode::exact_small
                                       : discrepancy::BoxMode::search,
          box_opts);
      report["schmidt_comparison"] = {{"box_discrepancy", box.value},
                                      {"box_lower_bound", box.lower_bound},
                                      {"sqrt_box_discrepancy", std::sqrt(box.value)}};
      if (sample.size() <= 100'000) {
        std::vector<oracle::GridVertex> gv;
        for (const auto& v : poly.grid_vertices()) gv.push_back({v.x, v.y});
        u64 brute = 0;
        for (const auto& p : sample.points()) brute += oracle::polygon_contains(gv, p.xn, p.yn, p.den);
        if (brute != r.exact) oracle_mismatch("convex count");
        checked = true;
      }
    } else if (a.kind == "ks-bound") {
      const auto r = discrepancy::koksma_szusz_bound(sample, a.M);
      params["M"] = a.M;
      report["params"] = params;
      report["value"] = r.value;
      report["witness"] = {{"inverse_M", 1.0 / static_cast<double>(a.M)},
                           {"weyl_term", r.weyl_term},
                           {"implied_constant", r.implied_constant}};
    } else if (a.kind == "bmv" || a.kind == "harman") {
      discrepancy::CountError e;
      if (a.kind == "bmv") {
        if (a.box.size() != 4) throw PreconditionError("disc bmv needs --box xi zeta alpha beta");
        const geometry::Box b{a.box[0], a.box[1], a.box[2], a.box[3]};
        e = discrepancy::bmv_error(sample, b, a.L1, a.L2);
        params["box"] = box_json(b);
        params["L1"] = a.L1;
        params["L2"] = a.L2;
      } else {
        if (a.center.size() != 2) throw PreconditionError("disc harman needs --center x y");
        const geometry::Disc d{{a.center[0], a.center[1]}, a.radius};
        e = discrepancy::harman_error(sample, d, a.L);
        params["disc"] = disc_json(d);
        params["L"] = a.L;
      }
      report["params"] = params;
      report["value"] = e.E;
      report["witness"] = {{"count", e.count},
                           {"measure", e.measure},
                           {"relative_count_error", e.relative_count_error},
                           {"absolute", e.absolute}};
    } else {
      throw PreconditionError("unknown disc kind '" + a.kind + "'");
    }
  }
  report["oracle_checked"] = checked;
  emit(io::dump_json(report) + "\n", a.out);
  return kExitOk;
}

// ---------------------------------------------------------------- report

struct ReportArgs {
  std::string config;
  int threads = 0;
  std::string out;
};

int cmd_report(const ReportArgs& a) {
  auto cfg = load_config(a.config);
  apply_environment(cfg);
  if (a.threads > 0) cfg.threads = a.threads;
  set_thread_count(cfg.threads);
  const auto report = acceptance::run_all(cfg);
  for (const auto& r : report.results) {
    std::cerr << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.detail
              << "\n";
  }
  emit(io::dump_json(report.to_json(cfg)) + "\n", a.out);
  return report.all_passed() ? kExitOk : kExitAcceptance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kloosterman sums, modular-inverse point sets and their discrepancy"};
  app.require_subcommand(1);
  std::function<int()> action;

  EvalArgs eval;
  auto* ev = app.add_subcommand("eval", "Evaluate one Kloosterman sum S(m, n; c)");
  ev->add_option("--m", eval.m)->required();
  ev->add_option("--n", eval.n)->required();
  ev->add_option("--c", eval.c)->required()->check(CLI::PositiveNumber);
  ev->add_option("--method", eval.method)->check(CLI::IsMember({"direct", "fast"}));
  ev->callback([&] { action = [&] { return cmd_eval(eval); }; });

  ScanArgs scan;
  auto* sc = app.add_subcommand("scan", "Aggregate Kloosterman sums to CSV");
  sc->add_option("kind", scan.kind)->required()->check(
      CLI::IsMember({"sum", "triple", "moment2", "linnik"}));
  sc->add_option("--m", scan.m, "sum/linnik: first argument");
  sc->add_option("--n", scan.n, "sum/linnik: second argument");
  sc->add_option("--M", scan.M, "triple: dyadic ranges of |m|")->check(CLI::PositiveNumber);
  sc->add_option("--N", scan.N, "triple/moment2: dyadic ranges of |n|")->check(CLI::PositiveNumber);
  sc->add_option("--X", scan.X, "modulus bounds")->check(CLI::PositiveNumber);
  sc->add_option("--backend", scan.backend)->check(CLI::IsMember({"direct", "dft"}));
  sc->add_option("--term-budget", scan.term_budget)->check(CLI::PositiveNumber);
  sc->add_option("--out", scan.out, "output file (default stdout)");
  sc->callback([&] { action = [&] { return cmd_scan(scan); }; });

  PointsArgs points;
  auto* pt = app.add_subcommand("points", "Write the modular-inverse point set S(X)");
  pt->add_option("--X", points.X)->required()->check(CLI::PositiveNumber);
  pt->add_option("--point-cap", points.point_cap)->check(CLI::PositiveNumber);
  points.csv = pt->add_option("--csv", points.csv_path, "CSV `a,b,c` (file, default stdout)")
                   ->expected(0, 1);
  points.svg = pt->add_option("--svg", points.svg_path, "SVG scatter (file, default stdout)")
                   ->expected(0, 1);
  pt->callback([&] { action = [&] { return cmd_points(points); }; });

  DiscArgs disc;
  auto* dc = app.add_subcommand("disc", "Discrepancy reports as JSON");
  dc->add_option("kind", disc.kind)->required()->check(
      CLI::IsMember({"box", "ball", "convex", "hyperbola", "ks-bound", "bmv", "harman"}));
  dc->add_option("--X", disc.X, "use S(X)");
  dc->add_option("--random", disc.random, "use this many seeded uniform points instead");
  dc->add_option("--seed", disc.seed);
  dc->add_option("--point-cap", disc.point_cap)->check(CLI::PositiveNumber);
  dc->add_option("--mode", disc.mode, "box: exact-small or search");
  dc->add_option("--exact-cap", disc.exact_cap)->check(CLI::PositiveNumber);
  dc->add_option("--seed-grid", disc.seed_grid)->check(CLI::PositiveNumber);
  dc->add_option("--seeds", disc.seeds, "ball: seed grid size")->check(CLI::PositiveNumber);
  dc->add_option("--polygon", disc.polygon, "convex: JSON array of [x, y] vertices");
  dc->add_option("--depth", disc.depth, "convex: dyadic cover depth");
  dc->add_option("--slack", disc.slack, "hyperbola: constant C0 in (ln X - C0)/X");
  dc->add_option("--M", disc.M, "ks-bound: frequency cutoff")->check(CLI::PositiveNumber);
  dc->add_option("--box", disc.box, "bmv: xi zeta alpha beta")->expected(4);
  dc->add_option("--L1", disc.L1);
  dc->add_option("--L2", disc.L2);
  dc->add_option("--center", disc.center, "harman: x y")->expected(2);
  dc->add_option("--radius", disc.radius);
  dc->add_option("--L", disc.L);
  dc->add_option("--out", disc.out, "output file (default stdout)");
  dc->callback([&] { action = [&] { return cmd_disc(disc); }; });

  ReportArgs rep;
  auto* rp = app.add_subcommand("report", "Run the acceptance suite and print a JSON report");
  rp->add_option("--config", rep.config)->required();
  rp->add_option("--threads", rep.threads)->check(CLI::Range(1, 1024));
  rp->add_option("--out", rep.out, "output file (default stdout)");
  rp->callback([&] { action = [&] { return cmd_report(rep); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    apply_thread_env();
    return action();
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAcceptance;
  }
}
