#pragma once

#include <complex>
#include <span>
#include <vector>

#include "modinv/aggregate.hpp"
#include "modinv/pointset.hpp"

/// Single-threaded versions of the parallel kernels, kept for testing and
/// benchmarking. They accumulate in plain ascending order.
namespace modinv::reference {

std::vector<double> batched_sums(std::span<const aggregate::IntPair> pairs, u64 c_lo, u64 c_hi,
                                 aggregate::Weight weight = aggregate::Weight::unit);

pointset::PointSet generate(u64 X);

std::vector<std::complex<double>> weyl_sums(const pointset::PointSet& ps,
                                            std::span<const aggregate::IntPair> freqs);

}  // namespace modinv::reference
