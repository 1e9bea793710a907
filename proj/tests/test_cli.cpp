// Exercises the installed command-line surface through a subprocess:
// flag parsing, JSON/CSV payloads, byte determinism, and exit codes.
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct CmdResult {
  int status = -1;
  std::string out;
};

CmdResult run_cli(const std::string& args) {
  const std::string cmd = std::string(BURGERS_CLI_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult result;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, n);
  const int rc = pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(cell);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("classify emits the case report as one JSON object") {
    const auto e = run_cli("classify --nu 1 --l 1 --A 1 --B -1");
    CHECK(e.status == 0);
    CHECK(e.out.find("{\"case\":\"e\"") == 0);
    CHECK(e.out.find("\"H\":-3,") != std::string::npos);

    const auto d = run_cli("classify --nu 1 --l 1 --A 2 --B 2");
    CHECK(d.status == 0);
    CHECK(d.out.find("\"case\":\"d\"") != std::string::npos);
    CHECK(d.out.find("\"lambda0\":-1}") != std::string::npos);

    const auto b = run_cli("classify --nu 1 --l 1 --A -2 --B -1");
    CHECK(b.status == 0);
    CHECK(b.out.find("\"case\":\"b\"") != std::string::npos);
    CHECK(b.out.find("\"H\":0,") != std::string::npos);
  }

  TEST_CASE("identical config produces identical bytes") {
    const std::string cmd = "spectrum --nu 1 --l 1 --A 1 --B -1 --count 6";
    const auto first = run_cli(cmd);
    const auto second = run_cli(cmd);
    CHECK(first.status == 0);
    CHECK(first.out == second.out);
    CHECK(!first.out.empty());

    const auto s1 = run_cli("stationary --nu 1 --l 1 --A -2 --B -1 --samples 64");
    const auto s2 = run_cli("stationary --nu 1 --l 1 --A -2 --B -1 --samples 64");
    CHECK(s1.out == s2.out);
  }

  TEST_CASE("spectrum CSV carries the closed-form eigenvalues for A=B=0") {
    const auto r = run_cli("spectrum --nu 1 --l 1 --A 0 --B 0 --count 4");
    CHECK(r.status == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == std::vector<std::string>{"index", "branch", "xi", "lambda", "zero_count"});
    const double pi2 = std::numbers::pi * std::numbers::pi;
    CHECK(std::stod(rows[1][3]) == 0.0);
    for (int n = 1; n <= 3; ++n)
      CHECK(std::stod(rows[n + 1][3]) == doctest::Approx(pi2 * n * n).epsilon(1e-12));
  }

  TEST_CASE("lyapunov CSV matches the closed form at l = pi") {
    const auto r = run_cli("lyapunov --nu 1 --l 3.14159265358979 --A 2 --B 2 --count 3");
    CHECK(r.status == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == std::vector<std::string>{"index", "mu"});
    const double expected[] = {-2.0, -5.0, -10.0};
    for (int i = 0; i < 3; ++i)
      CHECK(std::fabs(std::stod(rows[i + 1][1]) - expected[i]) < 1e-9);
  }

  TEST_CASE("stationary CSV reproduces the boundary rows") {
    const auto r = run_cli("stationary --nu 1 --l 1 --A -2 --B -1 --samples 11");
    CHECK(r.status == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 12);
    CHECK(rows[0] == std::vector<std::string>{"x", "u"});
    CHECK(std::stod(rows[1][1]) == doctest::Approx(-2.0).epsilon(1e-13));
    CHECK(std::stod(rows[11][1]) == doctest::Approx(-1.0).epsilon(1e-13));
  }

  TEST_CASE("modal CSV decays toward zero") {
    const auto r = run_cli("modal --nu 1 --l 1 --A 1 --B -1 --mode 1 --samples 32");
    CHECK(r.status == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 33);
    CHECK(rows[0] == std::vector<std::string>{"t", "D"});
    CHECK(std::stod(rows[1][1]) > std::stod(rows[32][1]));
    CHECK(std::stod(rows[32][1]) < 1e-8);
  }

  TEST_CASE("evolve writes samples and prints the JSON summary") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "burgers_cli_test";
    fs::create_directories(dir);
    const fs::path csv = dir / "report.csv";
    const auto r = run_cli("evolve --nu 1 --l 1 --A 1 --B -1 --cells 64 --t-end 2.2 --out " +
                           csv.string());
    CHECK(r.status == 0);
    CHECK(r.out.find("\"fitted_rate\":") != std::string::npos);
    CHECK(r.out.find("\"reliable\":true") != std::string::npos);
    std::ifstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "t,dist_exact,dist_discrete");
    fs::remove_all(dir);
  }

  TEST_CASE("BURGERS_OUTPUT_DIR supplies the default output directory") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "burgers_cli_envdir";
    fs::create_directories(dir);
    const std::string cmd = "BURGERS_OUTPUT_DIR=" + dir.string() + " " +
                            std::string(BURGERS_CLI_BIN) +
                            " stationary --nu 1 --l 1 --A 2 --B 2 --samples 8 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    pclose(pipe);
    CHECK(fs::exists(dir / "stationary.csv"));
    fs::remove_all(dir);
  }

  TEST_CASE("exit codes distinguish validation, numerical, and I/O failures") {
    CHECK(run_cli("classify --nu 0 --l 1 --A 1 --B -1").status == 2);   // bad parameter
    CHECK(run_cli("classify --nu 1 --l 1 --A 1").status == 2);          // missing flag
    CHECK(run_cli("nonsense").status == 2);                             // unknown command
    CHECK(run_cli("classify --nu 1 --l 1 --A 1 --B -1 --bogus 3").status == 2);
    CHECK(run_cli("modal --nu 1 --l 1 --A 1 --B -1 --alpha-fraction 2").status == 2);
    CHECK(run_cli("spectrum --nu 1 --l 1 --A 1 --B -1 --count 1").status == 2);
    // shock data whose spectral gap underflows double precision
    CHECK(run_cli("classify --nu 1 --l 1 --A 50 --B -50").status == 3);
    CHECK(run_cli("stationary --nu 1 --l 1 --A 1 --B -1 --out /nonexistent-dir/x.csv").status ==
          4);
  }
}
