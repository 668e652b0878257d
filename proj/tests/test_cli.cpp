#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(CLI_BINARY_PATH) + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.output.append(buf.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

fs::path write_temp(const std::string& name, const std::string& content) {
  const fs::path dir = fs::temp_directory_path() / "coniccurv_cli_test";
  fs::create_directories(dir);
  const fs::path file = dir / name;
  std::ofstream(file) << content;
  return file;
}

std::string fixture(const char* name) { return std::string(FIXTURES_DIR) + "/" + name; }

}  // namespace

TEST_CASE("curvature command on a closed square-ish circle sample") {
  std::string csv = "x,y\n";
  for (int i = 0; i < 12; ++i) {
    const double t = 2 * 3.14159265358979323846 * i / 12;
    csv += std::to_string(2 * std::cos(t)) + "," + std::to_string(2 * std::sin(t)) + "\n";
  }
  const auto path = write_temp("circle.csv", csv);
  const auto res = run_cli("curvature " + path.string() + " --closed");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("index,kappa_left,kappa_right,kappa_avg,sign,status") == 0);
  CHECK(res.output.find(",Ok") != std::string::npos);
}

TEST_CASE("json format carries the schema version") {
  const auto path = write_temp("arc.csv", "0,0\n1,0.4\n2,0.7\n3,0.8\n4,0.7\n5,0.4\n");
  const auto res = run_cli("--format json curvature " + path.string());
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("\"schema_version\":1") != std::string::npos);
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("bench-order stray_positional").exit_code == 1);
  CHECK(run_cli("no-such-command").exit_code == 1);
  CHECK(run_cli("energy missing.csv --levels 99").exit_code == 1);
}

TEST_CASE("data errors exit with code 2 and name the line") {
  const auto path = write_temp("bad.csv", "x,y\n1,2\nbad\n");
  const auto res = run_cli("curvature " + path.string());
  CHECK(res.exit_code == 2);
  CHECK(res.output.find("line 3") != std::string::npos);
  CHECK(run_cli("curvature /nonexistent/file.csv").exit_code == 2);
}

TEST_CASE("corner command finds the reference corner sample") {
  const auto res = run_cli("corner " + fixture("shaw32_lcurve.csv"));
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("corner_index,corner_alpha\n5,") != std::string::npos);
}

TEST_CASE("bench and energy commands run end to end") {
  const auto acc = run_cli("bench-accuracy");
  CHECK(acc.exit_code == 0);
  CHECK(acc.output.find("curve,circle,poly4,conic,coniccurv") == 0);

  const auto ord = run_cli("bench-order");
  CHECK(ord.exit_code == 0);
  CHECK(ord.output.find("k,h,cond_conic,re_conic,cond_coniccurv,re_coniccurv") == 0);
  CHECK(ord.output.find("slope,,") != std::string::npos);

  const auto en = run_cli("energy --curve ellipse --t0 1 --t1 2 --scheme parametric --levels 4");
  CHECK(en.exit_code == 0);
  CHECK(en.output.find("S,E,levels") == 0);

  const auto path = write_temp("ctrl.csv", "0,0\n1,1\n2,0\n");
  const auto en2 = run_cli("energy " + path.string() + " --levels 3 --scheme four-point");
  CHECK(en2.exit_code == 0);
}

TEST_CASE("split and tangents commands") {
  const auto path = write_temp("scurve.csv",
                               "-2,4\n-1.5,2.25\n-1,1\n-0.5,0.25\n0.5,0.07\n1,-0.68\n1.5,-1.93\n2,-3.68\n");
  const auto sp = run_cli("split " + path.string());
  CHECK(sp.exit_code == 0);
  CHECK(sp.output.find("piece,start_index,end_index,turn_sign") == 0);

  const auto tg = run_cli("tangents " + path.string());
  CHECK(tg.exit_code == 0);
  CHECK(tg.output.find("index,a,b,c,status,reduced") == 0);
}
