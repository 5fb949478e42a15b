#include <doctest.h>

#include <cfloat>
#include <cstdlib>
#include <sstream>

#include "modinv/config.hpp"
#include "modinv/io.hpp"

using namespace modinv;

TEST_CASE("format_double") {
  CHECK(io::format_double(0.1) == "0.10000000000000001");
  CHECK(io::format_double(-2.0) == "-2");
  CHECK(io::format_double(1.0 / 0.0) == "inf");
  CHECK(io::format_double(-1.0 / 0.0) == "-inf");
  CHECK(io::format_double(std::nan("")) == "nan");
}

TEST_CASE("dump_json prints 17 significant digits and keeps key order") {
  nlohmann::ordered_json j;
  j["z"] = 0.1;
  j["a"] = {1, 2.5, "x", true, nullptr};
  j["m"] = {{"k", 1.0 / 3.0}};
  const auto s = io::dump_json(j, 0);
  CHECK(s.find("0.10000000000000001") != std::string::npos);
  CHECK(s.find("0.33333333333333331") != std::string::npos);
  CHECK(s.find("\"z\"") < s.find("\"a\""));
  CHECK(s.find("\"a\"") < s.find("\"m\""));
  const auto back = nlohmann::json::parse(s);
  CHECK(back["a"][1] == 2.5);
  CHECK(back["a"][4].is_null());
}

TEST_CASE("series_csv") {
  const auto csv = io::series_csv(aggregate::complete_sum_series(1, 1, 4));
  CHECK(csv == "m,n,y,term,partial\n1,1,1,1,1\n1,1,2,1,2\n1,1,3,-1,1\n1,1,4,-2,-1\n");
}

TEST_CASE("config parsing") {
  std::istringstream in(
      "# comment\n"
      "term_budget = 5000  # trailing comment\n"
      "\n"
      "threads=8\n"
      "seed = 42\n"
      "output_dir = results\n"
      "tolerance.selberg = 1e-6\n");
  const auto cfg = parse_config(in);
  CHECK(cfg.term_budget == 5000);
  CHECK(cfg.threads == 8);
  CHECK(cfg.seed == 42);
  CHECK(cfg.output_dir == "results");
  CHECK(cfg.tolerances.selberg == 1e-6);
  CHECK(cfg.tolerances.weil == 1e-9);
  CHECK(cfg.point_cap == 8'000'000);

  const auto bad = [](const std::string& text) {
    std::istringstream s(text);
    return parse_config(s);
  };
  CHECK_THROWS_AS(bad("nonsense = 1\n"), ConfigError);
  CHECK_THROWS_AS(bad("threads\n"), ConfigError);
  CHECK_THROWS_AS(bad("threads = 0\n"), ConfigError);
  CHECK_THROWS_AS(bad("threads = 2000\n"), ConfigError);
  CHECK_THROWS_AS(bad("seed = -3\n"), ConfigError);
  CHECK_THROWS_AS(bad("point_cap = 12abc\n"), ConfigError);
  CHECK_THROWS_AS(bad("tolerance.weil = 1e-20\n"), ConfigError);
  CHECK_THROWS_AS(bad("tolerance.weil = nan\n"), ConfigError);
  CHECK_NOTHROW(bad("tolerance.weil = 2.220446049250313e-16\n"));
  CHECK_THROWS_AS(bad("output_dir =\n"), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/modinv.conf"), ConfigError);
}

TEST_CASE("thread count from the environment") {
  ExperimentConfig cfg;
  ::setenv("MODINV_THREADS", "3", 1);
  apply_environment(cfg);
  CHECK(cfg.threads == 3);
  ::setenv("MODINV_THREADS", "zero", 1);
  CHECK_THROWS_AS(apply_environment(cfg), ConfigError);
  ::unsetenv("MODINV_THREADS");
  ExperimentConfig untouched;
  apply_environment(untouched);
  CHECK(untouched.threads == 4);
}
