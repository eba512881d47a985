#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "forks/coloring.hpp"

// End-to-end checks of the CLI binary; the path arrives via FORKS_CLI_BIN.

namespace {

std::string cli_path() {
  const char* path = std::getenv("FORKS_CLI_BIN");
  REQUIRE_MESSAGE(path != nullptr, "FORKS_CLI_BIN must point at the forks binary");
  return path;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    r.out.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("solve reports size and a witness forest") {
  const auto file = write_temp("forks_cli_solve.txt", "2\nbw\nwb\n");
  const RunResult r = run("solve " + file.string() + " --side x");
  REQUIRE(r.exit_code == 0);
  const auto report = nlohmann::json::parse(r.out);
  CHECK(report["size"] == 1);
  CHECK(report["min_matching_weight"] == 1);
  CHECK(report["forest"]["side"] == "X");
  CHECK(report["forest"]["forks"].size() == 1);
}

TEST_CASE("solve of an all-black instance finds nothing") {
  const auto file = write_temp("forks_cli_black.txt", "2\nbb\nbb\n");
  const RunResult r = run("solve " + file.string());
  REQUIRE(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.out)["size"] == 0);
}

TEST_CASE("solve exit codes: parse failure 2, missing file 3") {
  const auto bad = write_temp("forks_cli_bad.txt", "2\nbww\nwb\n");
  CHECK(run("solve " + bad.string()).exit_code == 2);
  CHECK(run("solve /nonexistent/forks_instance.txt").exit_code == 3);
}

TEST_CASE("construct reports the certified bound") {
  const auto file = write_temp("forks_cli_construct.txt", "2\nbb\nww\n");
  const RunResult r = run("construct " + file.string());
  REQUIRE(r.exit_code == 0);
  const auto report = nlohmann::json::parse(r.out);
  CHECK(report["case"] == 1);
  CHECK(report["certified_size"] == 1);
  CHECK(report["bound_floor"] == 0);
}

TEST_CASE("construct rejects unbalanced instances with exit 4") {
  const auto file = write_temp("forks_cli_unbalanced.txt", "2\nbb\nbw\n");
  CHECK(run("construct " + file.string()).exit_code == 4);
}

TEST_CASE("gen output parses back and solves") {
  const RunResult gen = run("gen --family extremal --n 4");
  REQUIRE(gen.exit_code == 0);
  const forks::Coloring c = forks::parse_instance(gen.out);
  CHECK(forks::count_colors(c).black == 8);

  const RunResult balanced = run("gen --family balanced --n 5 --seed 1");
  REQUIRE(balanced.exit_code == 0);
  CHECK(forks::count_colors(forks::parse_instance(balanced.out)).black == 12);

  const RunResult white = run("gen --family bernoulli --n 3 --p 0");
  REQUIRE(white.exit_code == 0);
  CHECK(forks::count_colors(forks::parse_instance(white.out)).white == 9);

  // determinism across invocations
  CHECK(run("gen --family balanced --n 6 --seed 9").out ==
        run("gen --family balanced --n 6 --seed 9").out);
}

TEST_CASE("verify sweeps exhaustively below n=4 with zero violations") {
  const RunResult r = run("verify --n-max 3");
  REQUIRE(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,bound_floor,bound_ceil,min_f_observed,extremal_f,violations");
  std::getline(lines, line);
  CHECK(line == "1,0,1,0,0,0");
  std::getline(lines, line);
  CHECK(line == "2,0,1,1,1,0");  // min f over balanced K_{2,2} is 1
  std::getline(lines, line);
  const std::string n3 = line;
  CHECK(n3.substr(0, 6) == "3,0,1,");
  CHECK(n3.back() == '0');
}

TEST_CASE("verify n-max 1 succeeds trivially") {
  CHECK(run("verify --n-max 1").exit_code == 0);
}

TEST_CASE("bench emits one row per size") {
  const RunResult r = run("bench --n-list 8,12 --samples 1");
  REQUIRE(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,mean_solve_ms,mean_construct_ms");
  int rows = 0;
  while (std::getline(lines, line)) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 2);
}
