#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#ifndef RATINF_CLI_BIN
#error "RATINF_CLI_BIN must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(RATINF_CLI_BIN) + " " + args + " 2>/dev/null";
  std::array<char, 256> buffer{};
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buffer.data(), buffer.size(), pipe) != nullptr) output += buffer.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string write_base_file() {
  std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                     "/ratinf_cli_test_base.db";
  std::ofstream out(path);
  out << "atoms: a b c\n"
         "[level 1]\n"
         "a -> b\n"
         "[level 2]\n"
         "!b\n"
         "[level 3]\n"
         "b -> c\n";
  return path;
}

}  // namespace

TEST_CASE("query answers yes/no with exit code 0") {
  std::string base = write_base_file();
  RunResult strict_b = run("query --base " + base + " --mode strict \"a |~ b\"");
  CHECK(strict_b.exit_code == 0);
  CHECK(strict_b.output == "yes\n");

  RunResult strict_c = run("query --base " + base + " --mode strict \"a |~ c\"");
  CHECK(strict_c.exit_code == 0);
  CHECK(strict_c.output == "no\n");

  RunResult liberal_c = run("query --base " + base + " --mode liberal \"a |~ c\"");
  CHECK(liberal_c.exit_code == 0);
  CHECK(liberal_c.output == "yes\n");
}

TEST_CASE("extension prints minimal DNF or INCONSISTENT") {
  std::string base = write_base_file();
  CHECK(run("extension --base " + base + " --mode strict a").output == "a & b\n");
  CHECK(run("extension --base " + base + " --mode liberal a").output == "a & b & c\n");
  CHECK(run("extension --base " + base + " --mode strict false").output == "INCONSISTENT\n");
}

TEST_CASE("ordering dump starts at the top level") {
  std::string base = write_base_file();
  RunResult result = run("ordering --base " + base + " --mode strict");
  CHECK(result.exit_code == 0);
  CHECK(result.output.substr(0, 14) == "level 3: true\n");
}

TEST_CASE("rank output") {
  std::string base = write_base_file();
  RunResult ranked = run("rank --base " + base + " --mode strict \"true |~ a -> b\"");
  CHECK(ranked.exit_code == 0);
  CHECK(ranked.output == "rank=1 range=[1,3]\n");
  CHECK(run("rank --base " + base + " --mode strict \"false |~ a\"").output == "degenerate\n");
}

TEST_CASE("check and roundtrip report OK and exit 0") {
  RunResult check = run("check --atoms 2 --trials 25 --seed 7");
  CHECK(check.exit_code == 0);
  CHECK(check.output == "OK 25/25\n");

  RunResult roundtrip = run("roundtrip --atoms 1 --trials 10 --seed 3");
  CHECK(roundtrip.exit_code == 0);
  CHECK(roundtrip.output == "OK 10/10\n");
}

TEST_CASE("parse errors exit 2") {
  std::string base = write_base_file();
  CHECK(run("query --base " + base + " \"a ( |~ b\"").exit_code == 2);
  CHECK(run("query --base " + base + " \"a b\"").exit_code == 2);
  CHECK(run("query --base /nonexistent.db \"a |~ b\"").exit_code == 2);
  CHECK(run("bogus-subcommand").exit_code == 2);
}

TEST_CASE("limit and validation errors exit 3") {
  CHECK(run("check --atoms 9 --trials 1 --seed 0").exit_code == 3);
  std::string base = write_base_file();
  // rank of a non-consequence is a validation error
  CHECK(run("rank --base " + base + " --mode strict \"true |~ a\"").exit_code == 3);

  // ordering dumps are capped at 3 atoms
  std::string wide = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                     "/ratinf_cli_test_wide.db";
  std::ofstream out(wide);
  out << "atoms: a b c d\n[level 1]\na -> b\n";
  out.close();
  CHECK(run("ordering --base " + wide + " --mode strict").exit_code == 3);
  // but queries against the same base still work
  RunResult q = run("query --base " + wide + " --mode strict \"a |~ b\"");
  CHECK(q.exit_code == 0);
  CHECK(q.output == "yes\n");
}

TEST_CASE("the subset-order flag changes the liberal extension") {
  std::string base = write_base_file();
  RunResult literal = run("extension --base " + base +
                          " --mode liberal --subset-order literal a");
  CHECK(literal.exit_code == 0);
  CHECK(literal.output != "a & b & c\n");
}
