// End-to-end checks of the command-line tool: spawns the real binary and
// inspects stdout/stderr and exit codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "rloop/catalog.hpp"
#include "rloop/io.hpp"

using namespace rloop;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(RLOOP_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string data_path(const std::string& name) {
  return std::string(RLOOP_DATA_DIR) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/rloop_cli_test_" + name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  return path;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("analyze reproduces the printed structure of the shipped example") {
  const RunResult r = run_cli("analyze " + data_path("ex53.loop"));
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "G_S order 12"));
  CHECK(contains(r.output, "TAut order 24"));
  CHECK(contains(r.output, "Aut = {I,(2 3),(4 5),(2 3)(4 5)}"));
  CHECK(contains(r.output, "G_S isomorphism guess: A4"));
  CHECK(contains(r.output, "TAut isomorphism guess: S4"));
  CHECK(contains(r.output, "loop: false"));
  CHECK(contains(r.output, "twisted right gyrogroup: true"));
}

TEST_CASE("validate accepts the example and rejects a malformed table") {
  CHECK(run_cli("validate " + data_path("ex53.loop")).exit_code == 0);

  const std::string path = write_temp(
      "bad.loop", "elements: 1 2 3\nidentity: 1\ntable:\n1 2 3\n2 3 1\n3 3 2\n");
  const RunResult r = run_cli("validate " + path);
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "column"));
  CHECK(contains(r.output, "not bijective"));
}

TEST_CASE("inner, sigma and eta golden outputs") {
  const std::string ex = data_path("ex53.loop");
  CHECK(contains(run_cli("inner " + ex + " 2 4").output, "(2 3 4)"));
  CHECK(contains(run_cli("sigma " + ex + " 4 \"(2 3 4)\"").output, "(2 4 3)"));
  const RunResult eta = run_cli("eta " + ex);
  CHECK(eta.exit_code == 0);
  CHECK(contains(eta.output, "((2 3 4),(2 4 3))"));
  CHECK(contains(eta.output, "((2 4)(3 5),(2 5)(3 4))"));

  // eta on a non twisted right gyrogroup is property-false.
  const std::string bad = write_temp(
      "nontrg.loop", "elements: 1 2 3\nidentity: 1\ntable:\n1 2 3\n2 1 1\n3 3 2\n");
  CHECK(run_cli("eta " + bad).exit_code == 1);
}

TEST_CASE("enumerate totals and cap exit code") {
  CHECK(contains(run_cli("enumerate 3 --census").output, "total right loops: 4"));
  CHECK(contains(run_cli("enumerate 2").output, "total right loops: 1"));
  CHECK(run_cli("enumerate 9").exit_code == 3);
  CHECK(contains(run_cli("enumerate 4 --filter trg").output, "matching right loops: 14"));
}

TEST_CASE("project then validate round trips") {
  const RunResult proj = run_cli("project 4");
  CHECK(proj.exit_code == 0);
  const std::string path = write_temp("p4.loop", proj.output);
  const RunResult check = run_cli("analyze " + path);
  CHECK(contains(check.output, "G_S order 6"));
  CHECK(contains(check.output, "right gyrogroup: true"));
}

TEST_CASE("extend emits a loadable group file of order 60") {
  const RunResult ext = run_cli("extend " + data_path("ex53.loop"));
  CHECK(ext.exit_code == 0);
  const std::string path = write_temp("ext53.group", ext.output);
  const LoadedTable lt = load_table_file(path);
  REQUIRE(lt.is_group);
  CHECK(lt.group->order == 60);
}

TEST_CASE("deform golden case via the command line") {
  const RunResult proj = run_cli("project 5");
  const std::string path = write_temp("p5.loop", proj.output);
  const RunResult def = run_cli("deform " + path + " --rho \"(x1 x2)\"");
  CHECK(def.exit_code == 0);
  const std::string dpath = write_temp("p5d.loop", def.output);
  const RunResult an = run_cli("analyze " + dpath);
  CHECK(contains(an.output, "TAut order 24"));
  CHECK(contains(an.output, "Aut order 4"));
  CHECK(contains(an.output, "twisted right gyrogroup: true"));
}

TEST_CASE("transversal subcommand on S3") {
  const std::string path = write_temp("s3.group", serialize_table(symmetric_group_table(3)));
  const RunResult r = run_cli("transversal " + path +
                              " --subgroup \"I,[0.1]\" --transversal \"I,[0.1.2],[0.2.1]\"");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "classification: gyrotransversal"));
  CHECK(contains(r.output, "subgroup order: 2"));

  const RunResult bad = run_cli("transversal " + path +
                                " --subgroup \"I,[0.1.2]\" --transversal \"I,[0.1],[0.2]\"");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("twisted-subgroup subcommand and exit codes") {
  const std::string path = write_temp("s3b.group", serialize_table(symmetric_group_table(3)));
  CHECK(run_cli("twisted-subgroup " + path + " --subset \"I,[0.1],[0.2],[1.2]\"").exit_code == 0);
  const RunResult no = run_cli("twisted-subgroup " + path + " --subset \"I,[0.1.2]\"");
  CHECK(no.exit_code == 1);
  CHECK(contains(no.output, "false"));
}

TEST_CASE("equivalence subcommand") {
  const RunResult r = run_cli("equivalence " + data_path("ex53.loop"));
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "equivalence: holds"));
  CHECK(contains(r.output, "right loop property: fails"));
}

TEST_CASE("json twins parse and agree") {
  const RunResult r = run_cli("analyze " + data_path("ex53.loop") + " --json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"order\": 5"));
  CHECK(contains(r.output, "\"iso_guess\": \"A4\""));
  CHECK(contains(r.output, "\"iso_guess\": \"S4\""));
  CHECK(r.output.front() == '{');
  CHECK(contains(run_cli("enumerate 3 --census --json").output, "\"total\": 4"));
  CHECK(contains(run_cli("inner " + data_path("ex53.loop") + " 2 4 --json").output,
                 "\"f\": \"(2 3 4)\""));
}

TEST_CASE("reports are byte-deterministic") {
  const RunResult a = run_cli("analyze " + data_path("ex53.loop"));
  const RunResult b = run_cli("analyze " + data_path("ex53.loop"));
  CHECK(a.output == b.output);
}
