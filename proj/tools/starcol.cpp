#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "starcol/dot.hpp"
#include "starcol/exact_solver.hpp"
#include "starcol/instances.hpp"
#include "starcol/io.hpp"
#include "starcol/outerpath.hpp"
#include "starcol/reductions.hpp"
#include "starcol/star2_decider.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnknown = 3;

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

void emit_coloring(const starcol::Coloring& c, const std::string& path) {
  std::ostringstream buf;
  starcol::write_coloring(buf, c);
  write_text(path, buf.str());
}

void emit_graph(const starcol::Graph& g, const std::string& path) {
  std::ostringstream buf;
  starcol::write_edge_list(buf, g);
  write_text(path, buf.str());
}

int run(int argc, char** argv) {
  CLI::App app{"2-distance star colorings: checking, solving, reductions"};
  app.require_subcommand(1);

  // check: validate a coloring file against a graph file.
  auto* check = app.add_subcommand("check", "validate a coloring against a graph");
  std::string check_graph, check_coloring;
  int check_kappa = 2, check_lambda = 2;
  check->add_option("graph", check_graph, "edge-list file")->required();
  check->add_option("coloring", check_coloring, "coloring file")->required();
  check->add_option("--kappa", check_kappa, "number of colors");
  check->add_option("--lambda", check_lambda, "maximum component diameter (0, 1, or 2)");

  // solve: exact backtracking for any graph.
  auto* solve = app.add_subcommand("solve", "decide colorability by exact search");
  std::string solve_graph, solve_out;
  int solve_kappa = 2, solve_lambda = 2;
  std::uint64_t solve_nodes = 10'000'000;
  double solve_time = 0.0;
  solve->add_option("graph", solve_graph, "edge-list file")->required();
  solve->add_option("--kappa", solve_kappa, "number of colors");
  solve->add_option("--lambda", solve_lambda, "maximum component diameter (0, 1, or 2)");
  solve->add_option("--node-limit", solve_nodes, "search budget in assignments");
  solve->add_option("--time-limit", solve_time, "search budget in seconds (0 = none)");
  solve->add_option("-o,--output", solve_out, "write the coloring here ('-' = stdout)");

  // solve-outerplanar: the polynomial decider for 2 colors.
  auto* sop = app.add_subcommand("solve-outerplanar",
                                 "decide 2-colorability with star components (outerplanar input)");
  std::string sop_graph, sop_out;
  sop->add_option("graph", sop_graph, "edge-list file")->required();
  sop->add_option("-o,--output", sop_out, "write the coloring here ('-' = stdout)");

  // color-outerpath: the linear-time constructive routine.
  auto* cop = app.add_subcommand("color-outerpath",
                                 "2-color an outerpath so components are stars");
  std::string cop_graph, cop_out;
  cop->add_option("graph", cop_graph, "edge-list file")->required();
  cop->add_option("-o,--output", cop_out, "write the coloring here ('-' = stdout)");

  // reduce: hardness constructions.
  auto* reduce = app.add_subcommand("reduce", "build a hardness-reduction graph");
  auto* red_nae = reduce->add_subcommand(
      "naesat", "3-CNF to max-degree-5 graph for 2 colors (not-all-equal satisfiability)");
  std::string nae_cnf, nae_out;
  red_nae->add_option("cnf", nae_cnf, "DIMACS CNF file with 3-literal clauses")->required();
  red_nae->add_option("-o,--output", nae_out, "graph file (map goes to <output>.map)")->required();
  auto* red_3c = reduce->add_subcommand("threecolor", "graph 3-coloring to 3 colors with stars");
  std::string tc_graph, tc_out;
  red_3c->add_option("graph", tc_graph, "edge-list file")->required();
  red_3c->add_option("-o,--output", tc_out, "graph file (map goes to <output>.map)")->required();
  reduce->require_subcommand(1);

  // gen: instance generators.
  auto* gen = app.add_subcommand("gen", "generate instances");
  auto* gen_op = gen->add_subcommand("outerplanar", "connected random outerplanar graph");
  int gop_n = 10;
  std::uint64_t gop_seed = 1;
  std::string gop_out;
  gen_op->add_option("--n", gop_n, "vertex count (>= 3)")->required();
  gen_op->add_option("--seed", gop_seed, "random seed");
  gen_op->add_option("-o,--output", gop_out, "output file ('-' = stdout)");
  auto* gen_path = gen->add_subcommand("outerpath", "random outerpath");
  int gpa_n = 10;
  std::uint64_t gpa_seed = 1;
  bool gpa_maximal = false;
  std::string gpa_out;
  gen_path->add_option("--n", gpa_n, "vertex count (>= 3)")->required();
  gen_path->add_option("--seed", gpa_seed, "random seed");
  gen_path->add_flag("--maximal", gpa_maximal, "triangulate every inner face");
  gen_path->add_option("-o,--output", gpa_out, "output file ('-' = stdout)");
  auto* gen_hard = gen->add_subcommand(
      "hard", "the 17-vertex outerplanar graph with no 2-coloring into stars");
  std::string gh_out;
  gen_hard->add_option("-o,--output", gh_out, "output file ('-' = stdout)");
  auto* gen_complete = gen->add_subcommand("complete", "complete graph");
  int gc_n = 6;
  std::string gc_out;
  gen_complete->add_option("--n", gc_n, "vertex count")->required();
  gen_complete->add_option("-o,--output", gc_out, "output file ('-' = stdout)");
  gen->require_subcommand(1);

  // export-dot: figures.
  auto* dot = app.add_subcommand("export-dot", "write Graphviz text");
  std::string dot_graph, dot_coloring, dot_out;
  dot->add_option("graph", dot_graph, "edge-list file")->required();
  dot->add_option("-c,--coloring", dot_coloring, "coloring file to render");
  dot->add_option("-o,--output", dot_out, "output file ('-' = stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitYes : kExitUsage;
  }

  if (*check) {
    starcol::Graph g = starcol::read_edge_list_file(check_graph);
    // Read permissively so an overshooting color is reported as an invalid
    // coloring rather than a file error.
    starcol::Coloring c =
        starcol::read_coloring_file(check_coloring, g, std::max({1, check_kappa, g.vertex_count}));
    c.color_count = check_kappa;
    starcol::Verdict v = starcol::validate(g, c, check_kappa, check_lambda);
    if (v.valid) {
      std::cout << "VALID\n";
      return kExitYes;
    }
    std::cout << "INVALID ";
    switch (v.kind) {
      case starcol::ViolationKind::ColorOutOfRange:
        std::cout << "color-out-of-range";
        break;
      case starcol::ViolationKind::MonochromaticCycle:
        std::cout << "monochromatic-cycle";
        break;
      case starcol::ViolationKind::PathTooLong:
        std::cout << "path-too-long";
        break;
    }
    for (int x : v.witness) std::cout << ' ' << x;
    std::cout << '\n';
    return kExitNo;
  }

  if (*solve) {
    starcol::Graph g = starcol::read_edge_list_file(solve_graph);
    starcol::SolveBudget budget{solve_nodes, solve_time};
    starcol::SolveResult r = starcol::decide(g, solve_kappa, solve_lambda, budget);
    if (r.status == starcol::SolveStatus::Unknown) {
      std::cout << "UNKNOWN nodes=" << r.nodes_explored << '\n';
      return kExitUnknown;
    }
    if (r.status == starcol::SolveStatus::Uncolorable) {
      std::cout << "UNCOLORABLE nodes=" << r.nodes_explored << '\n';
      return kExitNo;
    }
    std::cout << "COLORABLE nodes=" << r.nodes_explored << '\n';
    if (!solve_out.empty()) emit_coloring(*r.coloring, solve_out);
    return kExitYes;
  }

  if (*sop) {
    starcol::Graph g = starcol::read_edge_list_file(sop_graph);
    auto c = starcol::decide_outerplanar_2star(g);
    if (!c) {
      std::cout << "UNCOLORABLE\n";
      return kExitNo;
    }
    std::cout << "COLORABLE\n";
    if (!sop_out.empty()) emit_coloring(*c, sop_out);
    return kExitYes;
  }

  if (*cop) {
    starcol::Graph g = starcol::read_edge_list_file(cop_graph);
    starcol::Coloring c = starcol::color_outerpath(g);
    std::cout << "COLORABLE\n";
    if (!cop_out.empty()) emit_coloring(c, cop_out);
    return kExitYes;
  }

  if (*red_nae) {
    std::ifstream in(nae_cnf);
    if (!in) throw std::runtime_error("cannot open " + nae_cnf);
    starcol::CnfFormula f = starcol::parse_dimacs_cnf(in);
    starcol::NaesatReduction r = starcol::reduce_naesat(f);
    emit_graph(r.graph, nae_out);
    std::ostringstream map;
    for (std::size_t i = 0; i < r.spine.size(); ++i) {
      map << "variable " << i + 1;
      for (int v : r.spine[i]) map << ' ' << v;
      map << '\n';
    }
    for (std::size_t j = 0; j < r.clause_vertex.size(); ++j) {
      map << "clause " << j;
      for (int t = 0; t < 3; ++t)
        map << ' ' << r.clause_vertex[j][t] << ':' << r.attachment[j][t];
      map << '\n';
    }
    write_text(nae_out + ".map", map.str());
    std::cout << "vertices=" << r.graph.vertex_count << " edges=" << r.graph.edge_count()
              << " max-degree=" << r.graph.max_degree() << '\n';
    return kExitYes;
  }

  if (*red_3c) {
    starcol::Graph g = starcol::read_edge_list_file(tc_graph);
    starcol::CliqueAttachment r = starcol::reduce_three_coloring(g);
    emit_graph(r.graph, tc_out);
    std::ostringstream map;
    for (std::size_t v = 0; v < r.added.size(); ++v) {
      map << "vertex " << v;
      for (int w : r.added[v]) map << ' ' << w;
      map << '\n';
    }
    write_text(tc_out + ".map", map.str());
    std::cout << "vertices=" << r.graph.vertex_count << " edges=" << r.graph.edge_count()
              << " max-degree=" << r.graph.max_degree() << '\n';
    return kExitYes;
  }

  if (*gen_op) emit_graph(starcol::random_outerplanar(gop_n, gop_seed), gop_out);
  if (*gen_path) emit_graph(starcol::random_outerpath(gpa_n, gpa_seed, gpa_maximal), gpa_out);
  if (*gen_hard) emit_graph(starcol::hard_outerplanar_17(), gh_out);
  if (*gen_complete) emit_graph(starcol::complete_graph(gc_n), gc_out);
  if (*gen) return kExitYes;

  if (*dot) {
    starcol::Graph g = starcol::read_edge_list_file(dot_graph);
    std::optional<starcol::Coloring> c;
    if (!dot_coloring.empty())
      c = starcol::read_coloring_file(dot_coloring, g, std::max(1, g.vertex_count));
    write_text(dot_out, starcol::to_dot(g, c));
    return kExitYes;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitUsage;
  }
}
