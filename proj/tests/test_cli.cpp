#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "tmg/constructions.hpp"
#include "tmg/io.hpp"
#include "test_support.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(TMG_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> chunk{};
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(chunk.data(), chunk.size(), pipe)) output += chunk.data();
  const int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), output};
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/tmg_cli_") + name;
}

std::string write_drawing(const tmg::Drawing& d, const std::string& name) {
  const std::string path = temp_path(name);
  tmg::save_drawing_file(d, path);
  return path;
}

}  // namespace

TEST_CASE("stats reports the X drawing") {
  const std::string path = write_drawing(tmgtest::x_drawing(), "x.tmgd");
  const auto result = run_cli("stats " + path);
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("n=4 e=2 cr=1") != std::string::npos);
  CHECK(result.output.find("girth=inf") != std::string::npos);
}

TEST_CASE("validate distinguishes clean and broken drawings") {
  const std::string good = write_drawing(tmgtest::x_drawing(), "good.tmgd");
  CHECK(run_cli("validate " + good).exit_code == 0);

  const std::string bad = temp_path("bad.tmgd");
  std::ofstream out(bad);
  out << "TMGD 1\nV a 0 0\nV b 4 0\nV w 2 0\nE ab a b 0 0 4 0\n";
  out.close();
  const auto result = run_cli("validate " + bad);
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("VertexOnEdgeInterior") != std::string::npos);
}

TEST_CASE("style-check exits 1 with a witness on the empty-lens gadget") {
  const std::string path =
      write_drawing(tmg::empty_lens_gadget(tmg::LensKind::FullParallelPair), "gadget.tmgd");
  const auto result = run_cli("style-check --style separated " + path);
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("violated") != std::string::npos);
  CHECK(result.output.find("edges=") != std::string::npos);

  const std::string ok = write_drawing(tmgtest::lens_with_interior_vertex(), "sep.tmgd");
  CHECK(run_cli("style-check --style separated " + ok).exit_code == 0);
}

TEST_CASE("construct + stats round trip through files") {
  const std::string path = temp_path("k4.tmgd");
  CHECK(run_cli("construct --family convex-complete --n 4 -o " + path).exit_code == 0);
  const auto result = run_cli("stats " + path);
  CHECK(result.output.find("n=4 e=6 cr=1") != std::string::npos);
}

TEST_CASE("transform planarize removes crossings") {
  const std::string path = write_drawing(tmgtest::x_drawing(), "x2.tmgd");
  const std::string out = temp_path("x2flat.tmgd");
  CHECK(run_cli("transform planarize " + path + " -o " + out).exit_code == 0);
  const auto result = run_cli("stats " + out);
  CHECK(result.output.find("n=5 e=4 cr=0") != std::string::npos);
}

TEST_CASE("transform reroute empties the gadget's lens") {
  const std::string path =
      write_drawing(tmg::empty_lens_gadget(tmg::LensKind::BetweenCrossings), "bc.tmgd");
  const std::string out = temp_path("bcfixed.tmgd");
  CHECK(run_cli("transform reroute " + path + " -o " + out).exit_code == 0);
  CHECK(run_cli("stats " + out).output.find("cr=0") != std::string::npos);
}

TEST_CASE("transform split respects the degree cap") {
  const std::string path = write_drawing(tmg::convex_complete(5), "k5.tmgd");
  const std::string out = temp_path("k5split.tmgd");
  CHECK(run_cli("transform split --d 2 " + path + " -o " + out).exit_code == 0);
  const auto result = run_cli("stats " + out);
  CHECK(result.output.find("cr=5") != std::string::npos);  // crossings preserved
}

TEST_CASE("bisect prints the width of a path") {
  const std::string path = write_drawing(tmgtest::path_drawing(5), "p5.tmgd");
  const auto result = run_cli("bisect --oracle " + path);
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("width=1") != std::string::npos);
}

TEST_CASE("decompose prints a trace") {
  const std::string path = write_drawing(tmg::convex_complete(6), "k6.tmgd");
  const auto result = run_cli("decompose --style multiplicity --m 1 " + path);
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("stopped at k=") != std::string::npos);
}

TEST_CASE("bound-check is satisfied on the n=5 arc construction") {
  const std::string path = write_drawing(tmg::separated_arc_construction(5), "arc5.tmgd");
  const auto result = run_cli("bound-check --style separated " + path);
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("satisfied") != std::string::npos);
}

TEST_CASE("render produces svg") {
  const std::string path = write_drawing(tmgtest::x_drawing(), "xr.tmgd");
  const auto result = run_cli("render " + path);
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("<svg") != std::string::npos);
}

TEST_CASE("report emits one row per family member") {
  const auto result = run_cli("report --family separated-arc --n-range 4..8");
  CHECK(result.exit_code == 0);
  std::size_t rows = 0;
  for (std::size_t at = result.output.find("separated");
       at != std::string::npos; at = result.output.find("separated", at + 1))
    ++rows;
  CHECK(rows == 5);
  CHECK(result.output.find("not-applicable") != std::string::npos);  // n=4: e=12 <= 16
  CHECK(result.output.find("satisfied") != std::string::npos);       // n>=5: e > 4n
  CHECK(result.output.find("VIOLATED") == std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("stats /no/such/file.tmgd").exit_code == 2);
  CHECK(run_cli("style-check --style multiplicity " +
                write_drawing(tmgtest::x_drawing(), "x3.tmgd"))
            .exit_code == 2);  // missing --m
  const std::string bad = temp_path("parse.tmgd");
  std::ofstream out(bad);
  out << "TMGD 1\nV a 1/0 0\n";
  out.close();
  CHECK(run_cli("validate " + bad).exit_code == 2);
}
