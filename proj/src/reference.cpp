#include "modinv/reference.hpp"

#include "modinv/arith.hpp"
#include "modinv/kloosterman.hpp"

namespace modinv::reference {

std::vector<double> batched_sums(std::span<const aggregate::IntPair> pairs, u64 c_lo, u64 c_hi,
                                 aggregate::Weight weight) {
  if (c_lo == 0 || c_hi < c_lo) throw PreconditionError("batched_sums: need 1 <= c_lo <= c_hi");
  std::vector<KahanSum> acc(pairs.size());
  for (u64 c = c_lo; c <= c_hi; ++c) {
    const kloosterman::InverseTable table(c);
    const kloosterman::CosineTable cosines(c);
    const double w = weight == aggregate::Weight::inverse_c ? 1.0 / static_cast<double>(c) : 1.0;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      acc[p].add(kloosterman::direct_sum(pairs[p].m, pairs[p].n, table, cosines) * w);
    }
  }
  std::vector<double> out(pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) out[p] = acc[p].value();
  return out;
}

pointset::PointSet generate(u64 X) {
  if (X == 0) throw PreconditionError("generate: X must be >= 1");
  std::vector<pointset::InversePair> points;
  points.push_back({1, 1, 1});
  for (u64 c = 2; c <= X; ++c) {
    for (u64 a = 1; a < c; ++a) {
      if (arith::gcd(a, c) != 1) continue;
      const u64 b = *arith::mod_inverse(static_cast<i64>(a), c);
      points.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                        static_cast<std::uint32_t>(c)});
    }
  }
  return pointset::PointSet(X, std::move(points));
}

std::vector<std::complex<double>> weyl_sums(const pointset::PointSet& ps,
                                            std::span<const aggregate::IntPair> freqs) {
  std::vector<std::complex<double>> out(freqs.size());
  for (std::size_t f = 0; f < freqs.size(); ++f) {
    KahanSum re, im;
    for (const auto& p : ps.points()) {
      const u64 k = (reduce_mod(freqs[f].m, p.c) * p.a + reduce_mod(freqs[f].n, p.c) * p.b) % p.c;
      re.add(kloosterman::unit_cos(k, p.c));
      im.add(kloosterman::unit_sin(k, p.c));
    }
    out[f] = {re.value(), im.value()};
  }
  return out;
}

}  // namespace modinv::reference
