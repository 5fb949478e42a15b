#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "modinv/common.hpp"

namespace modinv {

/// Missing or malformed configuration.
class ConfigError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

struct Tolerances {
  double weil = 1e-9;        // relative slack on the Weil bound
  double fast_direct = 1e-9; // times sqrt(c) tau(c)
  double selberg = 1e-8;     // times c
  double keystone = 1e-6;    // relative, Weyl sum vs complete Kloosterman sum
  double moment = 1e-9;      // relative, second moment vs brute force
  double box_oracle = 1e-12; // absolute, exact box discrepancy vs brute force
};

/// Flat `key = value` file; `#` starts a comment; blank lines are ignored.
/// Keys: term_budget, point_cap, exact_cap, threads, seed, output_dir and
/// tolerance.{weil,fast_direct,selberg,keystone,moment,box_oracle}.
struct ExperimentConfig {
  u64 term_budget = 1'000'000'000;
  u64 point_cap = 8'000'000;
  u64 exact_cap = 1000;
  int threads = 4;
  u64 seed = 20240601;
  std::string output_dir = "out";
  Tolerances tolerances;
};

ExperimentConfig parse_config(std::istream& in, const std::string& source = "<config>");
ExperimentConfig load_config(const std::filesystem::path& path);

/// MODINV_THREADS, when set, replaces `threads`.
void apply_environment(ExperimentConfig& config);

}  // namespace modinv
