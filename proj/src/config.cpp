#include "modinv/config.hpp"

#include <cfloat>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace modinv {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

u64 parse_positive(const std::string& key, const std::string& v) {
  u64 out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size() || out == 0) {
    throw ConfigError(key + ": expected a positive integer, got '" + v + "'");
  }
  return out;
}

double parse_tolerance(const std::string& key, const std::string& v) {
  char* end = nullptr;
  const double out = std::strtod(v.c_str(), &end);
  if (end != v.c_str() + v.size() || !(out >= DBL_EPSILON) || !std::isfinite(out)) {
    throw ConfigError(key + ": expected a tolerance >= machine epsilon, got '" + v + "'");
  }
  return out;
}

}  // namespace

ExperimentConfig parse_config(std::istream& in, const std::string& source) {
  ExperimentConfig cfg;
  using Setter = std::function<void(const std::string&, const std::string&)>;
  const std::map<std::string, Setter> setters = {
      {"term_budget", [&](auto& k, auto& v) { cfg.term_budget = parse_positive(k, v); }},
      {"point_cap", [&](auto& k, auto& v) { cfg.point_cap = parse_positive(k, v); }},
      {"exact_cap", [&](auto& k, auto& v) { cfg.exact_cap = parse_positive(k, v); }},
      {"threads",
       [&](auto& k, auto& v) {
         const u64 t = parse_positive(k, v);
         if (t > 1024) throw ConfigError(k + ": at most 1024 threads");
         cfg.threads = static_cast<int>(t);
       }},
      {"seed", [&](auto& k, auto& v) { cfg.seed = parse_positive(k, v); }},
      {"output_dir",
       [&](auto& k, auto& v) {
         if (v.empty()) throw ConfigError(k + ": must not be empty");
         cfg.output_dir = v;
       }},
      {"tolerance.weil", [&](auto& k, auto& v) { cfg.tolerances.weil = parse_tolerance(k, v); }},
      {"tolerance.fast_direct",
       [&](auto& k, auto& v) { cfg.tolerances.fast_direct = parse_tolerance(k, v); }},
      {"tolerance.selberg",
       [&](auto& k, auto& v) { cfg.tolerances.selberg = parse_tolerance(k, v); }},
      {"tolerance.keystone",
       [&](auto& k, auto& v) { cfg.tolerances.keystone = parse_tolerance(k, v); }},
      {"tolerance.moment", [&](auto& k, auto& v) { cfg.tolerances.moment = parse_tolerance(k, v); }},
      {"tolerance.box_oracle",
       [&](auto& k, auto& v) { cfg.tolerances.box_oracle = parse_tolerance(k, v); }},
  };

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = source + ":" + std::to_string(lineno) + ": ";
    if (eq == std::string::npos) throw ConfigError(where + "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end()) throw ConfigError(where + "unknown key '" + key + "'");
    try {
      it->second(key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(where + e.what());
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  return parse_config(in, path.string());
}

void apply_environment(ExperimentConfig& config) {
  const char* env = std::getenv("MODINV_THREADS");
  if (env == nullptr || *env == '\0') return;
  const u64 t = parse_positive("MODINV_THREADS", env);
  if (t > 1024) throw ConfigError("MODINV_THREADS: at most 1024 threads");
  config.threads = static_cast<int>(t);
}

}  // namespace modinv
