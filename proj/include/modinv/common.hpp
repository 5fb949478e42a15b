#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace modinv {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

/// Thrown when a request exceeds a configured memory or work budget.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an operation's precondition does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Compensated (Neumaier) accumulator. The order of add() calls fully
/// determines the result.
class KahanSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  void add(const KahanSum& other) {
    add(other.sum_);
    add(other.comp_);
  }
  [[nodiscard]] double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Number of OpenMP threads used by the parallel kernels.
int thread_count();

/// Sets the OpenMP thread count (values < 1 are clamped to 1).
void set_thread_count(int threads);

/// Applies MODINV_THREADS from the environment if set. Returns true if applied.
bool apply_thread_env();

/// Modular multiplication with a 128-bit intermediate; a, b need not be reduced.
inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

/// Reduces a signed value into [0, m).
inline u64 reduce_mod(i64 x, u64 m) {
  const i64 r = x % static_cast<i64>(m);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

}  // namespace modinv
