// Drives the installed binary end to end: exit codes, output formats,
// determinism. The binary path arrives via the FLAGFLOW_CLI compile
// definition.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(FLAGFLOW_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), n);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_CASE("curvature emits the signature as JSON") {
  RunResult r = run("curvature --metric 1,1,1");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["r_x"].get<double>() == doctest::Approx(5.0 / 12.0).epsilon(1e-14));
  CHECK(j["scalar"].get<double>() == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(j["min_sec"].get<double>() == doctest::Approx(1.0 / 16.0).epsilon(1e-13));
  CHECK(j.contains("dpos_6"));

  RunResult f = run("curvature --space 2,1 --metric 1,1,1");
  REQUIRE(f.exit_code == 0);
  auto jf = nlohmann::json::parse(f.output);
  CHECK(!jf.contains("min_sec"));
  CHECK(jf.contains("dpos_10"));
  CHECK(jf["r_z"].get<double>() == doctest::Approx(3.0 / 8.0).epsilon(1e-14));
}

TEST_CASE("equilibria reports the four Wallach points") {
  RunResult r = run("equilibria");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  REQUIRE(j.is_array());
  CHECK(j.size() == 4);
  int repellers = 0, saddles = 0;
  for (const auto& e : j) {
    if (e["kind"] == "repeller") ++repellers;
    if (e["kind"] == "saddle") ++saddles;
  }
  CHECK(repellers == 1);
  CHECK(saddles == 3);
}

TEST_CASE("theorem scenarios succeed with exit 0") {
  CHECK(run("theorem ricci-mixed").exit_code == 0);
  CHECK(run("theorem ricd-loss").exit_code == 0);
  CHECK(run("theorem family-dpos --space 2,1").exit_code == 0);
}

TEST_CASE("theorem reports are machine-readable with --json") {
  RunResult r = run("theorem ricci-mixed --json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["scenario"] == "ricci-mixed");
  CHECK(j["success"] == true);
  REQUIRE(j["checks"].is_array());
  for (const auto& c : j["checks"]) CHECK(c["ok"] == true);
}

TEST_CASE("the boundary-case note quotes the exact value 2/5") {
  RunResult r = run("theorem ricd-loss");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("2/5") != std::string::npos);
  CHECK(r.output.find("5/18") != std::string::npos);
}

TEST_CASE("scenario tolerances can be tightened without changing the verdict") {
  CHECK(run("theorem ricci-mixed --rtol 1e-12 --atol 1e-14").exit_code == 0);
}

TEST_CASE("verify passes, and the hidden corruption control fails") {
  CHECK(run("verify").exit_code == 0);
  CHECK(run("verify --space symbolic").exit_code == 0);
  CHECK(run("verify --space 2,1").exit_code == 0);
  CHECK(run("verify --corrupt").exit_code == 1);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("nosuch").exit_code == 2);
  CHECK(run("curvature --metric 1,2").exit_code == 2);
  CHECK(run("curvature --metric -1,1,1").exit_code == 2);
  CHECK(run("theorem ricci-mixed --t0 0.3").exit_code == 2);
  CHECK(run("theorem family-dpos --space 1,2").exit_code == 2);
  CHECK(run("portrait --grid 1").exit_code == 2);
  CHECK(run("integrate --start 0.9,0.9").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("portrait emits the interior lattice") {
  RunResult r = run("portrait --grid 6");
  REQUIRE(r.exit_code == 0);
  std::istringstream is(r.output);
  std::string header;
  std::getline(is, header);
  CHECK(header == "x,y,u,v");
  int rows = 0;
  std::string line;
  while (std::getline(is, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 10);  // interior lattice points with i + j < 6
}

TEST_CASE("outputs are byte-identical across runs") {
  for (const char* cmd : {"portrait --grid 12", "equilibria", "curvature --metric 0.3,0.4,0.3",
                          "integrate --start 0.2,0.2 --direction bwd --horizon 10"}) {
    RunResult a = run(cmd);
    RunResult b = run(cmd);
    REQUIRE(a.exit_code == 0);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.output == b.output);
  }
}

TEST_CASE("integrate emits CSV rows and event comments") {
  RunResult r = run("integrate --start 0.2,0.2 --direction bwd --horizon 10");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.rfind("time,x,y,z,", 0) == 0);
  CHECK(r.output.find("# event,r_x,") != std::string::npos);
}
