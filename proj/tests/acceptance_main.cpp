// Acceptance runner: one PASS/FAIL line per criterion.
//
//   modinv_acceptance [--config FILE] [--cli PATH]
//
// With --cli, criterion 10 also runs `PATH report` under MODINV_THREADS=1 and
// MODINV_THREADS=8 (plus a repeat) and requires byte-identical JSON.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "modinv/acceptance.hpp"
#include "modinv/config.hpp"

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the CLI report at the given thread count; returns the JSON bytes.
std::string cli_report(const std::string& cli, const std::string& config, int threads,
                       const std::filesystem::path& out) {
  const std::string cmd = "MODINV_THREADS=" + std::to_string(threads) + " \"" + cli +
                          "\" report --config \"" + config + "\" --out \"" + out.string() +
                          "\" 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  (void)rc;  // exit status reflects criterion verdicts, not the probe
  return slurp(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::string config_path;
  std::string cli;
  app.add_option("--config", config_path);
  app.add_option("--cli", cli);
  CLI11_PARSE(app, argc, argv);

  modinv::ExperimentConfig cfg;
  try {
    if (!config_path.empty()) cfg = modinv::load_config(config_path);
    modinv::apply_environment(cfg);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }
  modinv::set_thread_count(cfg.threads);

  bool all = true;
  for (int id = 1; id <= modinv::acceptance::kCriterionCount; ++id) {
    const auto t0 = std::chrono::steady_clock::now();
    auto r = modinv::acceptance::run_criterion(id, cfg);
    if (id == 10 && !cli.empty() && !config_path.empty()) {
      const auto dir = std::filesystem::temp_directory_path() /
                       ("modinv_acceptance_" + std::to_string(::getpid()));
      std::filesystem::create_directories(dir);
      const auto a = cli_report(cli, config_path, 1, dir / "t1.json");
      const auto b = cli_report(cli, config_path, 8, dir / "t8.json");
      const auto c = cli_report(cli, config_path, 8, dir / "t8b.json");
      std::filesystem::remove_all(dir);
      const bool same = !a.empty() && a == b && b == c;
      r.passed = r.passed && same;
      r.detail += same ? "; report bytes identical at 1 and 8 threads and on repeat"
                       : "; report bytes differ";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d: %s  %s (%s) [%.2f s]\n", r.id, r.passed ? "PASS" : "FAIL",
                r.name.c_str(), r.detail.c_str(), secs);
    std::fflush(stdout);
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
