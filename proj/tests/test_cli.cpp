#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "menos/json_io.hpp"
#include "menos/qcrb.hpp"

using namespace menos;

namespace {

constexpr double kPi = std::numbers::pi;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

std::string tmp_path(const std::string& name) {
  return std::string(MENOS_TEST_TMP_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << content;
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  static int counter = 0;
  const std::string capture = tmp_path("stdout_" + std::to_string(counter++) + ".txt");
  const std::string command = env_prefix + std::string(MENOS_CLI_PATH) + " " + args +
                              " > " + capture + " 2> /dev/null";
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.output = read_file(capture);
  return result;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::string> fields;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) fields.push_back(cell);
    rows.push_back(std::move(fields));
  }
  return rows;
}

std::string canonical_model_path() {
  const std::string path = tmp_path("canonical-pure-model.json");
  write_file(path, model_to_json(interferometer_model(0.0, 0.0)).dump(2));
  return path;
}

std::string sigma_y_povm_path() {
  const std::string path = tmp_path("sigma-y-povm.json");
  write_file(path, povm_to_json(equator_projective_povm(kPi / 2.0)).dump(2));
  return path;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("chi subcommand on the optimal working point") {
    const std::string report_path = tmp_path("chi-report.json");
    const RunResult run = run_cli("chi --model " + canonical_model_path() +
                                  " --povm " + sigma_y_povm_path() + " --out " +
                                  report_path + " --bruteforce-trials 25 --seed 5");
    CHECK(run.exit_code == 0);
    CHECK(std::abs(std::stod(run.output) - 4.0) <= 1e-9);

    const auto report = nlohmann::json::parse(read_file(report_path));
    CHECK(std::abs(report["chi"].get<double>() - 4.0) <= 1e-9);
    CHECK(std::abs(report["cfi"].get<double>() - 1.0) <= 1e-12);
    CHECK(std::abs(report["chi_bruteforce"].get<double>() - 4.0) <= 1e-6);
    CHECK(validate(povm_from_json(report["worst_noise"])).passed);
  }

  TEST_CASE("chi subcommand exit codes") {
    const std::string identity_path = tmp_path("identity-povm.json");
    write_file(identity_path,
               povm_to_json(Povm({HermitianMatrix::identity(2)})).dump());
    CHECK(run_cli("chi --model " + canonical_model_path() + " --povm " +
                  identity_path)
              .exit_code == 3);

    const std::string truncated_path = tmp_path("truncated.json");
    write_file(truncated_path, "{\"dim\": 2, \"elements\": [[[");
    CHECK(run_cli("chi --model " + canonical_model_path() + " --povm " +
                  truncated_path)
              .exit_code == 2);

    const std::string invalid_path = tmp_path("incomplete-povm.json");
    CMatrix a = CMatrix::Zero(2, 2);
    a(0, 0) = 0.6;
    CMatrix b = CMatrix::Zero(2, 2);
    b(0, 0) = 0.5;
    b(1, 1) = 1.0;
    write_file(invalid_path,
               povm_to_json(Povm({HermitianMatrix(a), HermitianMatrix(b)})).dump());
    CHECK(run_cli("chi --model " + canonical_model_path() + " --povm " +
                  invalid_path)
              .exit_code == 2);

    CHECK(run_cli("chi --model " + canonical_model_path()).exit_code == 2);
  }

  TEST_CASE("check subcommand exit codes and report") {
    const RunResult good = run_cli("check --model " + canonical_model_path() +
                                   " --povm " + sigma_y_povm_path());
    CHECK(good.exit_code == 0);
    const auto report = nlohmann::json::parse(good.output);
    CHECK(report["saturates"].get<bool>());
    CHECK(report["max_condition1_residual"].get<double>() <= 1e-10);

    const std::string computational_path = tmp_path("computational-povm.json");
    write_file(computational_path,
               povm_to_json(projective_from_states(
                                {CVector{{1.0, 0.0}}, CVector{{0.0, 1.0}}}))
                   .dump());
    const RunResult bad = run_cli("check --model " + canonical_model_path() +
                                  " --povm " + computational_path);
    CHECK(bad.exit_code == 1);
    CHECK_FALSE(nlohmann::json::parse(bad.output)["saturates"].get<bool>());

    const std::string mismatched_path = tmp_path("qutrit-povm.json");
    write_file(mismatched_path, povm_to_json(random_povm(3, 3, 1)).dump());
    CHECK(run_cli("check --model " + canonical_model_path() + " --povm " +
                  mismatched_path)
              .exit_code == 2);
  }

  TEST_CASE("tolerance override is accepted") {
    const RunResult run = run_cli(
        "check --model " + canonical_model_path() + " --povm " + sigma_y_povm_path(),
        "MENOS_TOL_OVERRIDE=100 ");
    CHECK(run.exit_code == 0);
  }

  TEST_CASE("interferometer sweep values and degenerate markers") {
    const std::string out = tmp_path("interferometer-small.csv");
    const RunResult run =
        run_cli("interferometer --phi-min 0 --phi-max 3.141592653589793 "
                "--steps 5 --visibility 0.98 --out " + out);
    CHECK(run.exit_code == 0);
    const auto rows = parse_csv(read_file(out));
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == std::vector<std::string>{"phi", "cfi_v1", "cfi_v", "chi"});
    CHECK(rows[1][3] == "inf");
    CHECK(rows[5][3] == "inf");
    // the middle row is the balanced point phi = pi/2
    CHECK(std::abs(std::stod(rows[3][1]) - 1.0) <= 1e-12);
    CHECK(std::abs(std::stod(rows[3][2]) - 0.9604) <= 1e-12);
    CHECK(std::abs(std::stod(rows[3][3]) - 4.0) <= 1e-9);

    CHECK(run_cli("interferometer --phi-min 2 --phi-max 1 --steps 5 --out " + out)
              .exit_code == 2);
  }

  TEST_CASE("superres-hg sweep values") {
    const std::string out = tmp_path("hg-small.csv");
    const RunResult run = run_cli(
        "superres-hg --theta-min 0.001 --theta-max 0.001 --steps 1 --modes 2 "
        "--sigma 1 --out " + out);
    CHECK(run.exit_code == 0);
    const auto rows = parse_csv(read_file(out));
    REQUIRE(rows.size() == 2);
    CHECK(std::abs(std::stod(rows[1][3]) - 0.25) <= 1e-12);          // qfi column
    CHECK(std::abs(std::stod(rows[1][1]) - 0.25) <= 1e-4 * 0.25);    // cfi near qfi

    const std::string trend = tmp_path("hg-trend.csv");
    CHECK(run_cli("superres-hg --theta-min 0.1 --theta-max 1 --steps 2 "
                  "--modes 4 --out " + trend)
              .exit_code == 0);
    const auto trend_rows = parse_csv(read_file(trend));
    CHECK(std::stod(trend_rows[1][2]) > std::stod(trend_rows[2][2]));

    CHECK(run_cli("superres-hg --theta-min -1 --theta-max 1 --steps 2 --out " + out)
              .exit_code == 2);
    CHECK(run_cli("superres-hg --theta-min 0.1 --theta-max 1 --steps 2 "
                  "--modes 1 --out " + out)
              .exit_code == 2);
  }

  TEST_CASE("superres-chiq sweep values") {
    const std::string out = tmp_path("chiq-small.csv");
    const RunResult run = run_cli(
        "superres-chiq --theta-min 2.8284271247461903 --theta-max 2.8284271247461903 "
        "--steps 1 --grid-n 32 --refine-iters 2 --out " + out);
    CHECK(run.exit_code == 0);
    const auto rows = parse_csv(read_file(out));
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::vector<std::string>{"theta", "chi_q", "phi_s", "phi_a", "cfi"});
    CHECK(std::stod(rows[1][1]) >= 4.0 - 1e-6);
    CHECK(std::abs(std::stod(rows[1][1]) - 4.0) <= 2e-2);
    CHECK(std::abs(std::stod(rows[1][4]) - 0.25) <= 1e-7);
  }

  TEST_CASE("json output format") {
    const std::string out = tmp_path("interferometer.json");
    const RunResult run = run_cli(
        "interferometer --phi-min 0 --phi-max 3.141592653589793 --steps 3 "
        "--format json --out " + out);
    CHECK(run.exit_code == 0);
    const auto rows = nlohmann::json::parse(read_file(out));
    REQUIRE(rows.is_array());
    REQUIRE(rows.size() == 3);
    CHECK(rows[0]["chi"] == "inf");
    CHECK(std::abs(rows[1]["chi"].get<double>() - 4.0) <= 1e-9);
  }

  TEST_CASE("sweeps are byte-deterministic") {
    const std::string first = tmp_path("det-a.csv");
    const std::string second = tmp_path("det-b.csv");
    const std::string args =
        "superres-hg --theta-min 0.1 --theta-max 6 --steps 20 --modes 3 --out ";
    CHECK(run_cli(args + first).exit_code == 0);
    CHECK(run_cli(args + second).exit_code == 0);
    CHECK(read_file(first) == read_file(second));
  }

  TEST_CASE("golden interferometer sweep") {
    const std::string out = tmp_path("interferometer-golden.csv");
    const RunResult run =
        run_cli("interferometer --phi-min 0 --phi-max 3.141592653589793 "
                "--steps 181 --visibility 0.98 --out " + out);
    CHECK(run.exit_code == 0);
    CHECK(read_file(out) ==
          read_file(std::string(MENOS_GOLDEN_DIR) + "/interferometer_phi181_v098.csv"));
  }

  TEST_CASE("golden superres-hg sweeps") {
    for (const int modes : {2, 3, 4}) {
      const std::string out = tmp_path("hg-golden-" + std::to_string(modes) + ".csv");
      const RunResult run = run_cli(
          "superres-hg --theta-min 0.1 --theta-max 6 --steps 60 --sigma 1 --modes " +
          std::to_string(modes) + " --out " + out);
      CHECK(run.exit_code == 0);
      CHECK(read_file(out) == read_file(std::string(MENOS_GOLDEN_DIR) +
                                        "/superres_hg_k" + std::to_string(modes) +
                                        "_steps60.csv"));
    }
  }
}
