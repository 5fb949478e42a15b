#include "modinv/common.hpp"

#include <omp.h>

#include <cstdlib>

namespace modinv {

int thread_count() { return omp_get_max_threads(); }

void set_thread_count(int threads) { omp_set_num_threads(threads < 1 ? 1 : threads); }

bool apply_thread_env() {
  const char* env = std::getenv("MODINV_THREADS");
  if (env == nullptr || *env == '\0') return false;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) return false;
  set_thread_count(static_cast<int>(v));
  return true;
}

}  // namespace modinv
