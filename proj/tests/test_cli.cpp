#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "oracles/oracles.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string("\"") + MODINV_CLI + "\" " + args + " 2>/dev/null";
  Run r;
  FILE* p = ::popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::size_t lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

std::string last_field(const std::string& csv) {
  const auto end = csv.find_last_not_of('\n');
  const auto line_start = csv.rfind('\n', end) + 1;
  const auto line = csv.substr(line_start, end - line_start + 1);
  return line.substr(line.rfind(',') + 1);
}

}  // namespace

TEST_CASE("cli eval") {
  const auto a = cli("eval --m 1 --n 1 --c 3");
  CHECK(a.code == 0);
  CHECK(nlohmann::json::parse(a.out)["value"] == -1.0);
  CHECK(nlohmann::json::parse(cli("eval --m 0 --n 0 --c 10").out)["value"] == 4.0);
  CHECK(nlohmann::json::parse(cli("eval --m 1 --n 1 --c 1").out)["value"] == 1.0);
  CHECK(nlohmann::json::parse(cli("eval --m 2 --n 3 --c 35 --method direct").out)["method"] == "direct");
  CHECK(cli("eval --m 1 --n 1 --c 0").code == 3);
  CHECK(cli("eval --m 1").code == 3);
  CHECK(cli("frobnicate").code == 3);
}

TEST_CASE("cli scan") {
  const auto t = cli("scan triple --M 1 --N 1 --X 1");
  CHECK(t.code == 0);
  CHECK(t.out == "M,N,X,kind,measured,envelope,ratio\n1,1,1,triple,4,2,2\n");
  const auto s = cli("scan sum --m 1 --n 1 --X 4");
  CHECK(s.out.rfind("m,n,y,term,partial\n", 0) == 0);
  CHECK(std::stod(last_field(s.out)) == -1.0);
  const auto m = cli("scan moment2 --N 2 --X 10");
  const auto line = m.out.substr(m.out.find('\n') + 1);
  std::vector<std::string> f;
  std::stringstream ss(line);
  for (std::string x; std::getline(ss, x, ',');) f.push_back(x);
  REQUIRE(f.size() == 7);
  const double want = modinv::oracle::second_moment(2, 10);
  CHECK(std::fabs(std::stod(f[4]) - want) < 1e-9 * want);
  const auto grid = cli("scan triple --M 1 2 --N 1 --X 5 10 --backend dft");
  CHECK(lines(grid.out) == 5);
  CHECK(cli("scan linnik --m 1 --n 1 --X 10 20").code == 0);
  CHECK(cli("scan triple --M 4 --N 4 --X 500 --term-budget 1000").code == 2);
}

TEST_CASE("cli points") {
  CHECK(lines(cli("points --X 1 --csv").out) == 2);
  CHECK(lines(cli("points --X 10 --csv").out) == 33);
  const auto dir = std::filesystem::temp_directory_path() / "modinv_cli_test";
  std::filesystem::create_directories(dir);
  const auto csv = (dir / "p.csv").string(), svg = (dir / "p.svg").string();
  CHECK(cli("points --X 600 --csv " + csv + " --svg " + svg).code == 0);
  std::ifstream in(csv);
  std::string text((std::istreambuf_iterator<char>(in)), {});
  CHECK(lines(text) == 109501);
  CHECK(std::filesystem::file_size(svg) > 0);
  std::filesystem::remove_all(dir);
  CHECK(cli("points --X 600 --csv --point-cap 100").code == 2);
  CHECK(cli("points --X 5").code == 3);
}

TEST_CASE("cli disc") {
  const auto h = nlohmann::json::parse(cli("disc hyperbola --X 100").out);
  CHECK(h["operation"] == "hyperbola");
  CHECK(h["value"].get<double>() >= (std::log(100.0) - 2.0) / 100.0);
  CHECK(h["oracle_checked"] == true);

  const auto b = nlohmann::json::parse(cli("disc box --X 12 --mode exact-small").out);
  CHECK(b["oracle_checked"] == true);
  CHECK(b["lower_bound"] == false);
  for (const char* key : {"operation", "params", "value", "witness", "oracle_checked"}) CHECK(b.contains(key));

  const auto k = nlohmann::json::parse(cli("disc ks-bound --X 100 --M 1").out);
  CHECK(k["value"].get<double>() >= 1.0);

  CHECK(nlohmann::json::parse(cli("disc ball --X 30 --seeds 4").out)["value"].get<double>() > 0.0);
  CHECK(cli("disc bmv --X 50 --box 0 0 0.3 0.3 --L1 20 --L2 20").code == 0);
  CHECK(cli("disc bmv --X 50 --box 0 0 0.3 0.3 --L1 1 --L2 20").code == 3);
  CHECK(cli("disc harman --X 50 --center 0.5 0.5 --radius 0.25 --L 50").code == 0);
  CHECK(cli("disc box --X 100 --mode exact-small").code == 2);
  CHECK(cli("disc box --random 40 --seed 3").code == 0);

  const auto dir = std::filesystem::temp_directory_path() / "modinv_cli_poly";
  std::filesystem::create_directories(dir);
  const auto poly = (dir / "pent.json").string();
  std::ofstream(poly) << "[[0.2,0.1],[0.8,0.15],[0.9,0.6],[0.5,0.9],[0.1,0.5]]";
  const auto c = nlohmann::json::parse(cli("disc convex --X 100 --polygon " + poly).out);
  CHECK(c["oracle_checked"] == true);
  CHECK(c["witness"]["cover_count"].get<unsigned>() <= c["witness"]["count"].get<unsigned>());
  std::ofstream(poly) << "{\"not\": \"an array\"}";
  CHECK(cli("disc convex --X 100 --polygon " + poly).code == 3);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cli report config errors") {
  CHECK(cli("report --config /nonexistent/modinv.conf").code == 3);
  const auto bad = std::filesystem::temp_directory_path() / "modinv_bad.conf";
  std::ofstream(bad) << "threads = many\n";
  CHECK(cli("report --config " + bad.string()).code == 3);
  std::filesystem::remove(bad);
}
