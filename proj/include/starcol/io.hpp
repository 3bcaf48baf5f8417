#pragma once

#include <iosfwd>
#include <string>

#include "starcol/coloring.hpp"
#include "starcol/graph.hpp"

namespace starcol {

// Edge-list format: '#' starts a comment line; the first data line is
// "n m" and is followed by m lines "u v". Throws std::runtime_error on
// malformed input.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

// Coloring format: one "vertex color" line per vertex, any order, '#'
// comments allowed. Every vertex of g must be assigned exactly once.
Coloring read_coloring(std::istream& in, const Graph& g, int kappa);
Coloring read_coloring_file(const std::string& path, const Graph& g, int kappa);
void write_coloring(std::ostream& out, const Coloring& c);
void write_coloring_file(const std::string& path, const Coloring& c);

}  // namespace starcol
