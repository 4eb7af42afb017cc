#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

std::string cli_path() {
  const char* path = std::getenv("MOVSIG_CLI");
  REQUIRE_MESSAGE(path != nullptr, "MOVSIG_CLI must point at the CLI binary");
  return path;
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string command = cli_path() + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  while (std::size_t n = std::fread(buffer, 1, sizeof(buffer), pipe)) {
    result.output.append(buffer, n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

fs::path temp_dir() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() /
                 ("movsig_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("coverage reports the direct-link boundary in degrees") {
  const RunResult r = run_cli("coverage --mode los --W 1.8");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("theta_plus_deg = 33.749") != std::string::npos);
  CHECK(r.output.find("coverage_deg = 112.502") != std::string::npos);
  CHECK(r.output.find("covered = [-90.000, -33.749] u [33.749, 90.000]") !=
        std::string::npos);
}

TEST_CASE("coverage handles the cascaded link and the numeric check") {
  const RunResult r = run_cli("coverage --mode nlos --W 1.8 --theta-t -10 --check");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("theta_r_minus_deg = -28.580") != std::string::npos);
  CHECK(r.output.find("theta_r_plus_deg = 55.657") != std::string::npos);
  CHECK(r.output.find("check = pass") != std::string::npos);
}

TEST_CASE("freq-opt resolves the degenerate broadside direction") {
  const RunResult r = run_cli("freq-opt --mode los --theta 0 --fa 8e9 --f-min 8e9");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("f_star = any") != std::string::npos);
  CHECK(r.output.find("resolved to f_min") != std::string::npos);
  CHECK(r.output.find("resolved_hz = 8.0000000000000000e+09") != std::string::npos);
}

TEST_CASE("freq-opt computes the cascaded closed form") {
  const RunResult r = run_cli("freq-opt --mode nlos --theta-r -90 --theta-t -10 --fa 8e9");
  CHECK(r.exit_code == 0);
  const auto pos = r.output.find("f_star_hz = ");
  REQUIRE(pos != std::string::npos);
  const double value = std::strtod(r.output.c_str() + pos + 12, nullptr);
  CHECK(value == doctest::Approx(8e9 / 1.17364817766693).epsilon(1e-10));
}

TEST_CASE("freq-opt emits json when asked") {
  const RunResult r = run_cli("freq-opt --mode los --theta 30 --fa 8e9 --format json");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["any"] == false);
  CHECK(doc["f_star_hz"].get<double>() == doctest::Approx(1.6e10).epsilon(1e-12));
}

TEST_CASE("validation failures exit with code 1") {
  CHECK(run_cli("freq-opt --mode los --theta 100 --fa 8e9").exit_code == 1);
  CHECK(run_cli("coverage --mode los --W 0.5").exit_code == 1);
  CHECK(run_cli("coverage --mode warp --W 1.5").exit_code == 1);
  CHECK(run_cli("no-such-command").exit_code == 1);
  CHECK(run_cli("sweep-los --no-such-flag").exit_code == 1);
  CHECK(run_cli("average --mode los --baselines ris_1bit --trials 2").exit_code == 1);
}

TEST_CASE("unwritable output paths exit with code 2") {
  const RunResult r =
      run_cli("coverage --mode los --W 1.8 -o /nonexistent_dir_movsig/out.txt");
  CHECK(r.exit_code == 2);
}

TEST_CASE("protocol emits the profile with the selection in the metadata") {
  const RunResult r = run_cli(
      "protocol --mode los --N 4 --S 8 --W 1.2 --theta 40 --reproducible");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("s,f_hz,power_w") != std::string::npos);
  CHECK(r.output.find("\"selected_subchannel\":") != std::string::npos);
  CHECK(r.output.find("# generated=") == std::string::npos);
  int data_lines = 0;
  std::istringstream lines(r.output);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line[0] != '#' && line[0] != 's') ++data_lines;
  }
  CHECK(data_lines == 8);
}

TEST_CASE("reproducible runs are byte-identical across reruns and worker counts") {
  const fs::path a = temp_dir() / "sweep_a.csv";
  const fs::path b = temp_dir() / "sweep_b.csv";
  const fs::path c = temp_dir() / "sweep_c.csv";
  const std::string base =
      "sweep-nlos --N 8 --S 16 --W 1.3 --step-deg 15 --seed 9 --reproducible -o ";
  CHECK(run_cli(base + a.string() + " --threads 1").exit_code == 0);
  CHECK(run_cli(base + b.string() + " --threads 1").exit_code == 0);
  CHECK(run_cli(base + c.string() + " --threads 4").exit_code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a) == slurp(c));
}

TEST_CASE("timestamps appear only without --reproducible") {
  const RunResult r = run_cli("scaling --N-list 4 --trials 20");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("# generated=") != std::string::npos);
  CHECK(r.output.find("N,mean_power_fis_w,mean_power_ris_w,theory_fis_w,theory_ris_w") !=
        std::string::npos);
}

TEST_CASE("config files supply defaults and flags override them") {
  const fs::path cfg = temp_dir() / "coverage.json";
  {
    std::ofstream out(cfg);
    out << R"({"mode": "los", "W": 1.4})";
  }
  const RunResult from_config = run_cli("coverage --mode los --config " + cfg.string());
  CHECK(from_config.exit_code == 0);
  CHECK(from_config.output.find("theta_plus_deg = 45.585") != std::string::npos);

  const RunResult overridden =
      run_cli("coverage --mode los --W 2.0 --config " + cfg.string());
  CHECK(overridden.exit_code == 0);
  CHECK(overridden.output.find("theta_plus_deg = 30.000") != std::string::npos);
}

TEST_CASE("table json output carries the resolved config") {
  const RunResult r = run_cli(
      "average --mode los --N 8 --W-list 1.2 --S-list 12 --trials 40 --seed 4 "
      "--reproducible --format json");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["config"]["experiment"] == "average_over_angles");
  CHECK(doc["config"]["trials"] == 40);
  CHECK(doc["config"]["width_ratios"][0] == 1.2);
  CHECK(doc["columns"][0] == "W");
  CHECK(doc["rows"].size() == 1);
}

TEST_CASE("pattern emits one column per frequency") {
  const RunResult r = run_cli(
      "pattern --mode nlos --N 8 --theta-t -50 --freqs 3 --step-deg 15 --reproducible");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("angle_deg,pattern_f1,pattern_f2,pattern_f3") != std::string::npos);
  CHECK(r.output.find("\"frequencies_hz\":") != std::string::npos);
}
