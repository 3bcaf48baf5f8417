#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct CmdResult {
  int code = -1;
  std::string out;
};

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("starcol_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string path_of(const std::string& name) { return (work_dir() / name).string(); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  REQUIRE(out.good());
  out << text;
}

CmdResult run_cli(const std::string& args) {
  const std::string capture = path_of("stdout.txt");
  const std::string cmd = std::string(STARCOL_CLI_PATH) + " " + args + " > " + capture + " 2>&1";
  const int status = std::system(cmd.c_str());
  CmdResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(capture);
  return r;
}

int count_occurrences(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("check validates colorings and reports witnesses") {
  spit(path_of("tri.txt"), "3 3\n0 1\n1 2\n0 2\n");
  spit(path_of("tri_good.col"), "0 0\n1 0\n2 1\n");
  spit(path_of("tri_bad.col"), "0 0\n1 0\n2 0\n");

  const CmdResult good = run_cli("check " + path_of("tri.txt") + " " + path_of("tri_good.col") +
                                 " --kappa 2 --lambda 2");
  CHECK(good.code == 0);
  CHECK(good.out.find("VALID") == 0);

  const CmdResult bad = run_cli("check " + path_of("tri.txt") + " " + path_of("tri_bad.col") +
                                " --kappa 2 --lambda 2");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("INVALID monochromatic-cycle") == 0);

  // A proper coloring fails at lambda settings it does not need.
  const CmdResult strict = run_cli("check " + path_of("tri.txt") + " " + path_of("tri_good.col") +
                                   " --kappa 2 --lambda 0");
  CHECK(strict.code == 1);

  // Using a color at or above kappa is invalid, not a usage error.
  spit(path_of("tri_over.col"), "0 0\n1 1\n2 2\n");
  const CmdResult over = run_cli("check " + path_of("tri.txt") + " " + path_of("tri_over.col") +
                                 " --kappa 2 --lambda 2");
  CHECK(over.code == 1);
  CHECK(over.out.find("INVALID color-out-of-range") == 0);
}

TEST_CASE("file errors exit with the usage code") {
  CHECK(run_cli("check missing_graph.txt missing.col").code == 2);
  spit(path_of("tri2.txt"), "3 3\n0 1\n1 2\n0 2\n");
  spit(path_of("short.col"), "0 0\n");
  CHECK(run_cli("check " + path_of("tri2.txt") + " " + path_of("short.col")).code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("gen outerplanar").code == 2);  // --n is required
  CHECK(run_cli("reduce naesat nothing.cnf").code == 2);  // -o is required
  CHECK(run_cli("--help").code == 0);
}

TEST_CASE("solve mirrors the exact solver and writes certificates") {
  const std::string hard = path_of("hard.txt");
  REQUIRE(run_cli("gen hard -o " + hard).code == 0);

  const CmdResult no = run_cli("solve " + hard + " --kappa 2 --lambda 2");
  CHECK(no.code == 1);
  CHECK(no.out.find("UNCOLORABLE nodes=") == 0);

  const std::string cert = path_of("hard32.col");
  const CmdResult yes = run_cli("solve " + hard + " --kappa 3 --lambda 2 -o " + cert);
  CHECK(yes.code == 0);
  CHECK(yes.out.find("COLORABLE nodes=") == 0);

  const CmdResult roundtrip =
      run_cli("check " + hard + " " + cert + " --kappa 3 --lambda 2");
  CHECK(roundtrip.code == 0);

  const CmdResult capped = run_cli("solve " + hard + " --kappa 2 --lambda 2 --node-limit 5");
  CHECK(capped.code == 3);
  CHECK(capped.out.find("UNKNOWN") == 0);
}

TEST_CASE("solve-outerplanar decides and certifies") {
  const std::string hard = path_of("hard_sop.txt");
  REQUIRE(run_cli("gen hard -o " + hard).code == 0);
  const CmdResult no = run_cli("solve-outerplanar " + hard);
  CHECK(no.code == 1);
  CHECK(no.out.find("UNCOLORABLE") == 0);

  const std::string g = path_of("op14.txt");
  REQUIRE(run_cli("gen outerplanar --n 14 --seed 9 -o " + g).code == 0);
  const std::string cert = path_of("op14.col");
  const CmdResult yes = run_cli("solve-outerplanar " + g + " -o " + cert);
  if (yes.code == 0) {
    CHECK(run_cli("check " + g + " " + cert + " --kappa 2 --lambda 2").code == 0);
  } else {
    CHECK(yes.code == 1);  // verified against solve below
    CHECK(run_cli("solve " + g + " --kappa 2 --lambda 2").code == 1);
  }

  // Not outerplanar: complete graph on four vertices.
  const std::string k4 = path_of("k4.txt");
  REQUIRE(run_cli("gen complete --n 4 -o " + k4).code == 0);
  CHECK(run_cli("solve-outerplanar " + k4).code == 2);
}

TEST_CASE("color-outerpath certificates re-validate") {
  const std::string g = path_of("path20.txt");
  REQUIRE(run_cli("gen outerpath --n 20 --seed 4 --maximal -o " + g).code == 0);
  const std::string cert = path_of("path20.col");
  const CmdResult r = run_cli("color-outerpath " + g + " -o " + cert);
  CHECK(r.code == 0);
  CHECK(run_cli("check " + g + " " + cert + " --kappa 2 --lambda 2").code == 0);
}

TEST_CASE("reduce naesat emits graph, map, and a solvable instance") {
  spit(path_of("fig.cnf"), "p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n");
  const std::string g = path_of("fig_graph.txt");
  const CmdResult r = run_cli("reduce naesat " + path_of("fig.cnf") + " -o " + g);
  CHECK(r.code == 0);
  CHECK(r.out.find("vertices=") != std::string::npos);
  CHECK(r.out.find("max-degree=5") != std::string::npos);
  CHECK(fs::exists(g));
  REQUIRE(fs::exists(g + ".map"));
  const std::string map = slurp(g + ".map");
  CHECK(count_occurrences(map, "variable ") == 3);
  CHECK(count_occurrences(map, "clause ") == 2);

  // The formula is not-all-equal satisfiable, so the graph is colorable.
  CHECK(run_cli("solve " + g + " --kappa 2 --lambda 2").code == 0);

  // An unsatisfiable formula maps to an uncolorable graph.
  spit(path_of("triple.cnf"), "p cnf 1 1\n1 1 1 0\n");
  const std::string bad = path_of("triple_graph.txt");
  REQUIRE(run_cli("reduce naesat " + path_of("triple.cnf") + " -o " + bad).code == 0);
  CHECK(run_cli("solve " + bad + " --kappa 2 --lambda 2").code == 1);
}

TEST_CASE("reduce threecolor emits graph and map") {
  spit(path_of("k3.txt"), "3 3\n0 1\n0 2\n1 2\n");
  const std::string g = path_of("k3_lift.txt");
  const CmdResult r = run_cli("reduce threecolor " + path_of("k3.txt") + " -o " + g);
  CHECK(r.code == 0);
  CHECK(r.out.find("vertices=18") != std::string::npos);
  REQUIRE(fs::exists(g + ".map"));
  CHECK(count_occurrences(slurp(g + ".map"), "vertex ") == 3);
  CHECK(run_cli("solve " + g + " --kappa 3 --lambda 2").code == 0);
}

TEST_CASE("gen is deterministic per seed") {
  const std::string a = path_of("gen_a.txt"), b = path_of("gen_b.txt");
  REQUIRE(run_cli("gen outerplanar --n 10 --seed 5 -o " + a).code == 0);
  REQUIRE(run_cli("gen outerplanar --n 10 --seed 5 -o " + b).code == 0);
  CHECK(slurp(a) == slurp(b));
  const std::string c = path_of("gen_c.txt");
  REQUIRE(run_cli("gen outerpath --n 10 --seed 5 --maximal -o " + c).code == 0);
  CHECK(slurp(a) != slurp(c));
}

TEST_CASE("export-dot renders nodes and bold monochromatic edges") {
  spit(path_of("dot_tri.txt"), "3 3\n0 1\n1 2\n0 2\n");
  const std::string plain = path_of("plain.dot");
  REQUIRE(run_cli("export-dot " + path_of("dot_tri.txt") + " -o " + plain).code == 0);
  const std::string text = slurp(plain);
  CHECK(count_occurrences(text, " -- ") == 3);
  CHECK(count_occurrences(text, "style=bold") == 0);
  for (int v = 0; v < 3; ++v)
    CHECK(text.find("  " + std::to_string(v) + ";") != std::string::npos);

  // A (3,2)-coloring of the complete graph on six vertices pairs the
  // vertices up: exactly three monochromatic (bold) edges.
  const std::string k6 = path_of("k6.txt");
  REQUIRE(run_cli("gen complete --n 6 -o " + k6).code == 0);
  const std::string cert = path_of("k6.col");
  REQUIRE(run_cli("solve " + k6 + " --kappa 3 --lambda 2 -o " + cert).code == 0);
  const std::string colored = path_of("k6.dot");
  REQUIRE(run_cli("export-dot " + k6 + " -c " + cert + " -o " + colored).code == 0);
  const std::string dot = slurp(colored);
  CHECK(count_occurrences(dot, " -- ") == 15);
  CHECK(count_occurrences(dot, "style=bold") == 3);
  for (int v = 0; v < 6; ++v)
    CHECK(dot.find("  " + std::to_string(v) + " [") != std::string::npos);
}
