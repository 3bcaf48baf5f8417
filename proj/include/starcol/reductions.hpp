#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "starcol/coloring.hpp"
#include "starcol/graph.hpp"

namespace starcol {

// A CNF formula with exactly three literals per clause. Literals are nonzero
// integers: +k / -k for variable k (1-based), as in DIMACS files.
struct CnfFormula {
  int variable_count = 0;
  std::vector<std::array<int, 3>> clauses;
};

// Reads a DIMACS "p cnf" file whose clauses all have three literals.
// Throws std::runtime_error on malformed input.
CnfFormula parse_dimacs_cnf(std::istream& in);

// Whether every clause contains both a true and a false literal.
bool nae_satisfies(const CnfFormula& f, const std::vector<bool>& assignment);

// The 6-vertex truth block: adjacent poles u1, u2 (vertices 0, 1) joined to
// every vertex of the path v1..v4 (vertices 2..5). In any 2-coloring with
// star components the poles get distinct colors and v1..v4 alternate.
Graph variable_gadget();

// `copies` truth blocks in a row, consecutive ones linked by an edge from v4
// of one to v1 of the next, so the concatenated v-path alternates globally.
Graph chain_graph(int copies);

// Output of the not-all-equal satisfiability reduction: a graph of maximum
// degree 5 that admits a 2-coloring with star components iff the formula has
// a not-all-equal satisfying assignment.
struct NaesatReduction {
  CnfFormula formula;
  Graph graph;
  // Per variable: the concatenated v-path of its chain, in order. Truth is
  // read off the vertices at odd 0-based indices (even 1-based positions).
  std::vector<std::vector<int>> spine;
  // Per clause: its triangle vertices, and the chain vertex each one hangs on.
  std::vector<std::array<int, 3>> clause_vertex;
  std::vector<std::array<int, 3>> attachment;
};

NaesatReduction reduce_naesat(const CnfFormula& f);

// Certificate maps for reduce_naesat. For a not-all-equal satisfying
// assignment, assignment_to_coloring returns a valid 2-coloring with star
// components; for any other assignment the deterministic construction is
// still returned and fails validation. coloring_to_assignment requires a
// valid 2-coloring of the reduction graph with star components.
Coloring assignment_to_coloring(const NaesatReduction& r, const std::vector<bool>& assignment);
std::vector<bool> coloring_to_assignment(const NaesatReduction& r, const Coloring& c);

// Output of the 3-coloring reduction: every original vertex is completed to
// a 6-clique with five fresh vertices, so the result admits a 3-coloring with
// star components iff the original graph has a proper 3-coloring. Raises the
// maximum degree by 5.
struct CliqueAttachment {
  Graph graph;
  int original_vertex_count = 0;
  std::vector<std::array<int, 5>> added;  // clique mates of each original vertex
};

CliqueAttachment reduce_three_coloring(const Graph& g);

// Certificate maps for reduce_three_coloring.
Coloring lift_three_coloring(const CliqueAttachment& r, const Coloring& proper);
Coloring extract_three_coloring(const CliqueAttachment& r, const Coloring& c);

// Triangle-free 7-vertex block used to build clause gadgets when the host
// graph must stay triangle-free: a 2x3 grid (vertices 0..5, row-major) plus a
// degree-2 vertex 6 adjacent to the two opposite corners 0 and 5.
Graph grid_clause_gadget();

}  // namespace starcol
