// Integration tests driving the installed CLI binary end to end.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "doctest.h"

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

CliResult run_cli(const std::string& args) {
  const std::string command =
      std::string(TREEPOLY_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    result.output.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("compute prints canonical polynomials") {
  CliResult r = run_cli("compute P \"((()))\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "x^3*y + 1\n");

  r = run_cli("compute A \"(()())\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "x*y^2 + y\n");

  r = run_cli("compute pgf \"(())\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1/2*x + 1/2\n");

  r = run_cli("compute M \"(()())\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "2*x*y - z^2 + 2*z\n");

  r = run_cli("compute p --level-sequence \"0 1 2\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "x^3\n");
}

TEST_CASE("compute handles forest files") {
  const std::string dir =
      std::filesystem::temp_directory_path() / "treepoly_cli_test";
  REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);
  const std::string forest_path = dir + "/forest.txt";
  {
    FILE* f = fopen(forest_path.c_str(), "w");
    REQUIRE(f != nullptr);
    fputs("()\n()\n", f);
    fclose(f);
  }
  CliResult r = run_cli("compute P --file " + forest_path);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "x^2*y^2 + 2*x*y + 1\n");

  // tree-only invariants reject forests: usage error
  r = run_cli("compute M --file " + forest_path);
  CHECK(r.exit_code == 1);

  // empty file = empty forest, P = 1
  const std::string empty_path = dir + "/empty.txt";
  {
    FILE* f = fopen(empty_path.c_str(), "w");
    REQUIRE(f != nullptr);
    fclose(f);
  }
  r = run_cli("compute P --file " + empty_path);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1\n");
}

TEST_CASE("exit code contract") {
  CHECK(run_cli("").exit_code == 1);                      // no subcommand
  CHECK(run_cli("compute").exit_code == 1);               // missing args
  CHECK(run_cli("compute Q \"()\"").exit_code == 1);      // unknown invariant
  CHECK(run_cli("compute P \"((\"").exit_code == 2);      // tree parse error
  CHECK(run_cli("compute P \"()\"").exit_code == 0);
  CHECK(run_cli("reconstruct --invariant P --poly \"x +\"").exit_code == 2);
  CHECK(run_cli("collide --invariant p").exit_code == 1);  // no --n
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("simulate --mode percolation --q 7 \"()\"").exit_code == 1);
}

TEST_CASE("enumerate prints one canonical encoding per line") {
  CliResult r = run_cli("enumerate --n 4");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "(((())))\n((()()))\n(()(()))\n(()()())\n");

  r = run_cli("enumerate --n 1 --format records");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "{\"tree\":\"()\"}\n");
}

TEST_CASE("collide finds the known nine-vertex p classes") {
  CliResult r = run_cli("collide --invariant p --n 9 --format records");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"invariant\":\"p\"") != std::string::npos);
  CHECK(r.output.find("-x^9 + 3*x^8 - x^7 - 3*x^6 + x^5 + 2*x^3") !=
        std::string::npos);
  CHECK(r.output.find("x^9 - x^8 - x^7 + x^4 + x^3") != std::string::npos);

  // deterministic output across job counts
  const CliResult serial = run_cli("collide --invariant p --n 9 --jobs 1");
  const CliResult parallel = run_cli("collide --invariant p --n 9 --jobs 4");
  CHECK(serial.exit_code == 0);
  CHECK(serial.output == parallel.output);

  // desk-scale bound enforced
  CHECK(run_cli("collide --invariant M --n 14").exit_code == 1);
}

TEST_CASE("collide summary mode") {
  CliResult r = run_cli("collide --invariant P --n-max 6 --forests");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("n=0 population=1 classes=0 colliding=0") !=
        std::string::npos);
  CHECK(r.output.find("n=6 population=48 classes=0 colliding=0") !=
        std::string::npos);
}

TEST_CASE("reconstruct recovers trees from polynomials") {
  CliResult r = run_cli("reconstruct --invariant P --poly \"1 + x*y\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "()\n");

  r = run_cli("reconstruct --invariant P --poly \"1 + x*y\" --format records");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "{\"invariant\":\"P\",\"n\":1,\"tree\":\"()\"}\n");

  r = run_cli(
      "reconstruct --invariant P --poly "
      "\"1 + x^3*y + x^4*y + x^6*y + x^6*y^2 + x^7*y^2 + x^8*y^2 + x^9*y^3\"");
  CHECK(r.exit_code == 0);
  // exactly one tree; P is complete
  CHECK(r.output.size() > 0);
  CHECK(std::count(r.output.begin(), r.output.end(), '\n') == 1);
}

TEST_CASE("verify passes clean and fails when a fault is injected") {
  CliResult r = run_cli("verify --n-max 5");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("all checks passed") != std::string::npos);

  r = run_cli("verify --n-max 5 --inject-fault");
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("[FAIL]") != std::string::npos);
  CHECK(r.output.find("witness") != std::string::npos);

  CHECK(run_cli("verify --n-max 1").exit_code == 0);
}

TEST_CASE("simulate agrees with the exact polynomials and is reproducible") {
  const std::string percolation =
      "simulate --mode percolation --q 0.5 --samples 20000 --seed 42 "
      "\"(())\"";
  CliResult r = run_cli(percolation);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("result: PASS") != std::string::npos);
  CHECK(r.output.find("exact p(q): 1/4") != std::string::npos);
  CHECK(run_cli(percolation).output == r.output);

  r = run_cli(
      "simulate --mode cutting --samples 20000 --seed 42 --format records "
      "\"(()())\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"pass\":true") != std::string::npos);
  CHECK(r.output.find("\"pgf\":\"1/3*x + 2/3\"") != std::string::npos);
}
