#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "modinv/config.hpp"

namespace modinv::acceptance {

/// Frozen regression bound for box discrepancy times X^{5/6} over
/// X in {25, 50, 100, 200, 400}.
inline constexpr double kBoxEnvelopeConstant = 3.1;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;          // one-line human summary
  nlohmann::ordered_json data; // deterministic numbers backing the verdict
};

inline constexpr int kCriterionCount = 11;

/// Runs one criterion (1..11). Runtime limits stated by a criterion are part
/// of its verdict but never of its data.
CriterionResult run_criterion(int id, const ExperimentConfig& config);

struct Report {
  std::vector<CriterionResult> results;
  [[nodiscard]] bool all_passed() const;
  /// Deterministic JSON: no timings, no thread count.
  [[nodiscard]] nlohmann::ordered_json to_json(const ExperimentConfig& config) const;
};

Report run_all(const ExperimentConfig& config);

/// Numeric fingerprint of every parallel kernel at the current thread count.
nlohmann::ordered_json determinism_probe(const ExperimentConfig& config);

}  // namespace modinv::acceptance
