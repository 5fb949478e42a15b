#include "modinv/aggregate.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>

#include "modinv/arith.hpp"
#include "modinv/kloosterman.hpp"

namespace modinv::aggregate {

namespace {

constexpr u64 kBlocksPerWave = 64;

void check_budget(u64 c_lo, u64 c_hi, std::size_t pairs, const Options& options) {
  const arith::TotientTable table(c_hi);
  const u128 terms = static_cast<u128>(table.prefix(c_hi) - table.prefix(c_lo - 1)) * pairs;
  if (terms > options.term_budget) {
    throw CapacityError("aggregate: " + std::to_string(static_cast<u64>(terms)) +
                        " Kloosterman terms exceed the budget of " +
                        std::to_string(options.term_budget));
  }
}

struct FftwBuffer {
  explicit FftwBuffer(u64 size)
      : data(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * size))) {}
  ~FftwBuffer() { fftw_free(data); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
  fftw_complex* data;
};

// S(m, n; c) for all pairs at one modulus, via one DFT per distinct n.
void evaluate_modulus_dft(u64 c, std::span<const IntPair> pairs, std::span<double> out) {
  const kloosterman::InverseTable table(c);
  FftwBuffer in(c), spectrum(c);
  fftw_plan plan;
#pragma omp critical(modinv_fftw_planner)
  plan = fftw_plan_dft_1d(static_cast<int>(c), in.data, spectrum.data, FFTW_BACKWARD,
                          FFTW_ESTIMATE);

  std::map<i64, std::vector<std::size_t>> by_n;
  for (std::size_t p = 0; p < pairs.size(); ++p) by_n[pairs[p].n].push_back(p);

  for (const auto& [n, indices] : by_n) {
    std::fill_n(&in.data[0][0], 2 * c, 0.0);
    const u64 nr = reduce_mod(n, c);
    for (const auto& u : table.units()) {
      const u64 k = mulmod(nr, u.inv, c);
      in.data[u.a % c][0] = kloosterman::unit_cos(k, c);
      in.data[u.a % c][1] = kloosterman::unit_sin(k, c);
    }
    fftw_execute_dft(plan, in.data, spectrum.data);
    for (std::size_t p : indices) out[p] = spectrum.data[reduce_mod(pairs[p].m, c)][0];
  }
#pragma omp critical(modinv_fftw_planner)
  fftw_destroy_plan(plan);
}

void evaluate_modulus(u64 c, std::span<const IntPair> pairs, std::span<double> out,
                      Backend backend) {
  if (backend == Backend::dft) {
    evaluate_modulus_dft(c, pairs, out);
    return;
  }
  const kloosterman::InverseTable table(c);
  const kloosterman::CosineTable cosines(c);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    out[p] = kloosterman::direct_sum(pairs[p].m, pairs[p].n, table, cosines);
  }
}

std::string format17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::vector<double> batched_sums(std::span<const IntPair> pairs, u64 c_lo, u64 c_hi,
                                 Weight weight, const Options& options) {
  if (c_lo == 0 || c_hi < c_lo) throw PreconditionError("batched_sums: need 1 <= c_lo <= c_hi");
  check_budget(c_lo, c_hi, pairs.size(), options);
  const std::size_t P = pairs.size();
  const u64 nblocks = (c_hi - c_lo) / kModulusBlock + 1;

  std::vector<KahanSum> total(P);
  std::vector<KahanSum> wave(kBlocksPerWave * P);
  for (u64 first = 0; first < nblocks; first += kBlocksPerWave) {
    const u64 count = std::min(kBlocksPerWave, nblocks - first);
    std::fill(wave.begin(), wave.end(), KahanSum{});
#pragma omp parallel for schedule(dynamic, 1)
    for (u64 b = 0; b < count; ++b) {
      std::vector<double> values(P);
      KahanSum* acc = wave.data() + b * P;
      const u64 begin = c_lo + (first + b) * kModulusBlock;
      const u64 end = std::min(c_hi, begin + kModulusBlock - 1);
      for (u64 c = begin; c <= end; ++c) {
        evaluate_modulus(c, pairs, values, options.backend);
        const double w = weight == Weight::inverse_c ? 1.0 / static_cast<double>(c) : 1.0;
        for (std::size_t p = 0; p < P; ++p) {
          acc[p].add(values[p] * w);
        }
      }
    }
    for (u64 b = 0; b < count; ++b) {
      for (std::size_t p = 0; p < P; ++p) total[p].add(wave[b * P + p]);
    }
  }
  std::vector<double> out(P);
  for (std::size_t p = 0; p < P; ++p) out[p] = total[p].value();
  return out;
}

CompleteSumSeries complete_sum_series(i64 m, i64 n, u64 X, const Options& options) {
  if (X == 0) throw PreconditionError("complete_sum_series: X must be >= 1");
  check_budget(1, X, 1, options);
  CompleteSumSeries series{m, n, X, std::vector<double>(X), std::vector<double>(X)};
#pragma omp parallel for schedule(dynamic, 16)
  for (u64 c = 1; c <= X; ++c) {
    const kloosterman::InverseTable table(c);
    series.terms[c - 1] = kloosterman::direct({m, n, c}, table).value;
  }
  KahanSum acc;
  for (u64 y = 1; y <= X; ++y) {
    acc.add(series.terms[y - 1]);
    series.partial[y - 1] = acc.value();
  }
  return series;
}

std::vector<IntPair> signed_grid(u64 M, u64 N) {
  std::vector<i64> ms, ns;
  for (i64 v = -static_cast<i64>(2 * M - 1); v <= -static_cast<i64>(M); ++v) ms.push_back(v);
  for (i64 v = static_cast<i64>(M); v < static_cast<i64>(2 * M); ++v) ms.push_back(v);
  for (i64 v = -static_cast<i64>(2 * N - 1); v <= -static_cast<i64>(N); ++v) ns.push_back(v);
  for (i64 v = static_cast<i64>(N); v < static_cast<i64>(2 * N); ++v) ns.push_back(v);
  std::vector<IntPair> pairs;
  pairs.reserve(ms.size() * ns.size());
  for (i64 m : ms) {
    for (i64 n : ns) pairs.push_back({m, n});
  }
  return pairs;
}

SumGrid triple_sum(u64 M, u64 N, u64 X, const Options& options) {
  if (M == 0 || N == 0 || X == 0) throw PreconditionError("triple_sum: M, N, X must be >= 1");
  const auto pairs = signed_grid(M, N);
  const auto sums = batched_sums(pairs, 1, X, Weight::unit, options);
  SumGrid grid{M, N, X, {}, 0.0};
  grid.entries.reserve(pairs.size());
  KahanSum total;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    grid.entries.push_back({pairs[p].m, pairs[p].n, std::fabs(sums[p])});
    total.add(std::fabs(sums[p]));
  }
  grid.total = total.value();
  return grid;
}

MomentResult second_moment(u64 N, u64 X, const Options& options) {
  if (N == 0 || X == 0) throw PreconditionError("second_moment: N, X must be >= 1");
  std::vector<IntPair> plain;
  for (i64 n = -static_cast<i64>(2 * N - 1); n <= -static_cast<i64>(N); ++n) plain.push_back({n, 1});
  for (i64 n = static_cast<i64>(N); n < static_cast<i64>(2 * N); ++n) plain.push_back({n, 1});
  std::vector<IntPair> signed_pairs;
  for (i64 n = static_cast<i64>(N); n < static_cast<i64>(2 * N); ++n) {
    signed_pairs.push_back({n, 1});
    signed_pairs.push_back({n, -1});
  }
  const auto t = batched_sums(plain, 1, X, Weight::unit, options);
  const auto w = batched_sums(signed_pairs, X, 2 * X - 1, Weight::inverse_c, options);
  KahanSum value, normalized;
  for (double v : t) value.add(v * v);
  for (double v : w) normalized.add(v * v);
  return {N, X, value.value(), normalized.value()};
}

const char* to_string(RatioKind kind) {
  switch (kind) {
    case RatioKind::triple: return "triple";
    case RatioKind::moment2: return "moment2";
    case RatioKind::linnik: return "linnik";
  }
  return "?";
}

double triple_envelope(u64 M, u64 N, u64 X) {
  const double mn = static_cast<double>(M) * static_cast<double>(N);
  const double x = static_cast<double>(X);
  return mn * x + std::pow(mn, 2.0 / 3.0) * std::pow(x, 7.0 / 6.0);
}

double moment2_envelope(u64 N, u64 X) {
  const double n = static_cast<double>(N);
  const double x = static_cast<double>(X);
  return n * x * x + std::cbrt(n) * std::pow(x, 7.0 / 3.0);
}

std::vector<RatioRow> bound_ratio_report(std::span<const RatioQuery> grid,
                                         const Options& options) {
  if (grid.empty()) throw PreconditionError("bound_ratio_report: grid must be non-empty");
  std::vector<RatioRow> rows;
  for (const auto& q : grid) {
    RatioRow row{q, 0.0, 0.0, 0.0};
    switch (q.kind) {
      case RatioKind::triple:
        row.measured = triple_sum(q.M, q.N, q.X, options).total;
        row.envelope = triple_envelope(q.M, q.N, q.X);
        break;
      case RatioKind::moment2:
        row.measured = second_moment(q.N, q.X, options).value;
        row.envelope = moment2_envelope(q.N, q.X);
        break;
      case RatioKind::linnik: {
        const IntPair pair{static_cast<i64>(q.M), static_cast<i64>(q.N)};
        row.measured = std::fabs(batched_sums({&pair, 1}, 1, q.X, Weight::unit, options)[0]);
        row.envelope = static_cast<double>(q.X);
        break;
      }
    }
    row.ratio = row.measured / row.envelope;
    rows.push_back(row);
  }
  return rows;
}

std::string ratio_csv(std::span<const RatioRow> rows) {
  std::string out = "M,N,X,kind,measured,envelope,ratio\n";
  for (const auto& r : rows) {
    out += std::to_string(r.query.M) + "," + std::to_string(r.query.N) + "," +
           std::to_string(r.query.X) + "," + to_string(r.query.kind) + "," +
           format17(r.measured) + "," + format17(r.envelope) + "," + format17(r.ratio) + "\n";
  }
  return out;
}

}  // namespace modinv::aggregate
