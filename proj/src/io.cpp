#include "starcol/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace starcol {

namespace {

// Yields successive non-comment, non-blank lines.
bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
  }
  return false;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line)) throw std::runtime_error("edge list: missing header");
  std::istringstream header(line);
  long long n, m;
  if (!(header >> n >> m) || n < 0 || m < 0)
    throw std::runtime_error("edge list: malformed header, expected \"n m\"");
  std::string extra;
  if (header >> extra) throw std::runtime_error("edge list: trailing tokens in header");
  std::vector<std::pair<int, int>> edges;
  for (long long i = 0; i < m; ++i) {
    if (!next_data_line(in, line)) throw std::runtime_error("edge list: fewer edges than announced");
    std::istringstream row(line);
    int u, v;
    if (!(row >> u >> v)) throw std::runtime_error("edge list: malformed edge line: " + line);
    if (row >> extra) throw std::runtime_error("edge list: trailing tokens on edge line: " + line);
    edges.emplace_back(u, v);
  }
  if (next_data_line(in, line)) throw std::runtime_error("edge list: more data than announced");
  try {
    return build_graph(static_cast<int>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("edge list: ") + e.what());
  }
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  auto out = open_out(path);
  write_edge_list(out, g);
}

Coloring read_coloring(std::istream& in, const Graph& g, int kappa) {
  Coloring c;
  c.color_count = kappa;
  c.colors.assign(g.vertex_count, -1);
  std::string line, extra;
  while (next_data_line(in, line)) {
    std::istringstream row(line);
    int v, color;
    if (!(row >> v >> color)) throw std::runtime_error("coloring: malformed line: " + line);
    if (row >> extra) throw std::runtime_error("coloring: trailing tokens: " + line);
    if (v < 0 || v >= g.vertex_count)
      throw std::runtime_error("coloring: vertex out of range: " + std::to_string(v));
    if (c.colors[v] != -1) throw std::runtime_error("coloring: vertex assigned twice: " + std::to_string(v));
    c.colors[v] = color;
  }
  for (int v = 0; v < g.vertex_count; ++v)
    if (c.colors[v] == -1)
      throw std::runtime_error("coloring: vertex missing: " + std::to_string(v));
  return c;
}

Coloring read_coloring_file(const std::string& path, const Graph& g, int kappa) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return read_coloring(in, g, kappa);
}

void write_coloring(std::ostream& out, const Coloring& c) {
  for (std::size_t v = 0; v < c.colors.size(); ++v) out << v << ' ' << c.colors[v] << '\n';
}

void write_coloring_file(const std::string& path, const Coloring& c) {
  auto out = open_out(path);
  write_coloring(out, c);
}

}  // namespace starcol
