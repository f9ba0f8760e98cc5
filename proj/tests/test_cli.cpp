// Runs the detsat executable as a subprocess.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kWork = fs::temp_directory_path() / "detsat_cli_test";

int cli(const std::string& args, const std::string& out_file = "") {
  fs::create_directories(kWork);
  std::string cmd = std::string(DETSAT_CLI_PATH) + " " + args;
  cmd += out_file.empty() ? " > /dev/null" : " > " + (kWork / out_file).string();
  cmd += " 2> " + (kWork / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path write_file(const std::string& name, const std::string& text) {
  fs::create_directories(kWork);
  std::ofstream(kWork / name) << text;
  return kWork / name;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("verify m = 2 passes with the documented schema") {
  REQUIRE(cli("verify --m 2 --alpha ones --suites all", "m2.json") == 0);
  const auto j = nlohmann::json::parse(slurp(kWork / "m2.json"));
  for (const char* key : {"m", "alpha", "field", "order", "version", "seed"}) CHECK(j["meta"].contains(key));
  REQUIRE(j["checks"].is_array());
  for (const auto& c : j["checks"]) {
    for (const char* key : {"id", "status", "elapsed_ms", "paper_anchor", "certificate", "detail"})
      CHECK(c.contains(key));
    CHECK(c["status"] == "pass");
  }
}

TEST_CASE("golden reports") {
  REQUIRE(cli("verify --m 2 --alpha ones --suites all --no-timings", "m2_golden.json") == 0);
  CHECK(slurp(kWork / "m2_golden.json") == slurp(fs::path(DETSAT_GOLDEN_DIR) / "verify_m2_all.json"));
  REQUIRE(cli("verify --m 3 --alpha ones --field fp:32003 --suites heights,saturation --no-timings",
              "m3_golden.json") == 0);
  CHECK(slurp(kWork / "m3_golden.json") == slurp(fs::path(DETSAT_GOLDEN_DIR) / "verify_m3_heights_saturation.json"));
}

TEST_CASE("byte-identical reports given seed and spec") {
  const std::string args = "verify --m 2 --alpha @" + write_file("a.json", "[[2,1,1],[1,3,1]]").string() +
                           " --seed 7 --no-timings";
  REQUIRE(cli(args, "r1.json") == 0);
  REQUIRE(cli(args, "r2.json") == 0);
  CHECK(slurp(kWork / "r1.json") == slurp(kWork / "r2.json"));
}

TEST_CASE("input validation exits with 2") {
  CHECK(cli("verify --m 2 --alpha @" + write_file("bad.json", "[[1,2],[3,4]]").string()) == 2);
  CHECK(slurp(kWork / "stderr.txt").find("input error") != std::string::npos);
  CHECK(cli("verify --m 2 --alpha @" + write_file("neg.json", "[[1,1,1],[1,-1,1]]").string()) == 2);
  CHECK(cli("verify --m 2 --alpha @" + write_file("junk.json", "{not json").string()) == 2);
  CHECK(cli("verify --m 2 --alpha @/nonexistent/alpha.json") == 2);
  CHECK(cli("verify --m 2 --alpha twos") == 2);
  CHECK(cli("verify --m 0") == 2);
  CHECK(cli("verify --m 2 --suites bogus") == 2);
  CHECK(cli("verify --m 2 --field fp:32002") == 2);
  CHECK(cli("verify --m 2 --order deglex") == 2);
  CHECK(cli("verify --m 2 --n 0") == 2);
  CHECK(cli("frobnicate") == 2);
  CHECK(cli("") == 2);
}

TEST_CASE("exhausted budgets exit with 3") {
  CHECK(cli("verify --m 3 --suites saturation --budget-pairs 3 --no-timings", "tight.json") == 3);
  const auto j = nlohmann::json::parse(slurp(kWork / "tight.json"));
  bool any = false;
  for (const auto& c : j["checks"]) any = any || c["status"] == "inconclusive";
  CHECK(any);
}

TEST_CASE("text format and --out") {
  const fs::path out = kWork / "report.txt";
  REQUIRE(cli("verify --m 2 --suites identities --format text --out " + out.string()) == 0);
  const std::string text = slurp(out);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("identities.delta_products") != std::string::npos);
}

TEST_CASE("compute dumps derived data and CSV strands") {
  const fs::path csv = kWork / "csv";
  fs::remove_all(csv);
  REQUIRE(cli("compute --m 2 --n 1,2 --csv-dir " + csv.string(), "compute.json") == 0);
  const auto j = nlohmann::json::parse(slurp(kWork / "compute.json"));
  CHECK(j["delta"] == "x1^3 + x2^3 - 3*x1*x2*x3 + x3^3");
  CHECK(j["beta"] == nlohmann::json::array({1, 1, 1}));
  CHECK(j["strands"][1]["ranks"] == nlohmann::json::array({6, 6, 1}));
  CHECK(fs::exists(csv / "strand_n1_d1.csv"));
  CHECK(fs::exists(csv / "strand_n2_d2.csv"));
}

TEST_CASE("explain") {
  CHECK(cli("explain resolution.exact.n2", "explain.txt") == 0);
  CHECK(slurp(kWork / "explain.txt").find("resolution.exact") != std::string::npos);
  CHECK(cli("explain no.such.check") == 2);
}

}  // TEST_SUITE
