#include "starcol/reductions.hpp"

#include <cmath>
#include <cstdlib>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace starcol {
namespace {

int ceil_half(int x) { return x <= 0 ? 0 : (x + 1) / 2; }

void add_block_edges(std::vector<std::pair<int, int>>& edges, int base) {
  edges.push_back({base + 0, base + 1});  // poles
  for (int j = 2; j <= 4; ++j) edges.push_back({base + j, base + j + 1});
  for (int u = 0; u <= 1; ++u)
    for (int j = 2; j <= 5; ++j) edges.push_back({base + u, base + j});
}

}  // namespace

CnfFormula parse_dimacs_cnf(std::istream& in) {
  std::string line;
  CnfFormula f;
  int clause_count = -1;
  std::vector<int> pending;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first == "c") continue;
    if (first == "%") break;
    if (first == "p") {
      std::string kind;
      if (clause_count >= 0 || !(ls >> kind >> f.variable_count >> clause_count) ||
          kind != "cnf" || f.variable_count < 0 || clause_count < 0)
        throw std::runtime_error("malformed problem line");
      continue;
    }
    if (clause_count < 0) throw std::runtime_error("clause data before the problem line");
    ls.clear();
    ls.seekg(0);
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        if (pending.size() != 3) throw std::runtime_error("every clause must have three literals");
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
      } else {
        if (std::abs(lit) > f.variable_count) throw std::runtime_error("literal out of range");
        pending.push_back(lit);
      }
    }
    if (!ls.eof()) throw std::runtime_error("unexpected token in clause data");
  }
  if (clause_count < 0) throw std::runtime_error("missing problem line");
  if (!pending.empty()) throw std::runtime_error("unterminated clause");
  if (static_cast<int>(f.clauses.size()) != clause_count)
    throw std::runtime_error("clause count does not match the problem line");
  return f;
}

bool nae_satisfies(const CnfFormula& f, const std::vector<bool>& assignment) {
  if (static_cast<int>(assignment.size()) != f.variable_count)
    throw std::invalid_argument("assignment size must match the variable count");
  for (const auto& cl : f.clauses) {
    int true_count = 0;
    for (int lit : cl) {
      bool value = assignment[std::abs(lit) - 1];
      if ((lit > 0) == value) ++true_count;
    }
    if (true_count == 0 || true_count == 3) return false;
  }
  return true;
}

Graph variable_gadget() { return chain_graph(1); }

Graph chain_graph(int copies) {
  if (copies < 1) throw std::invalid_argument("need at least one copy");
  std::vector<std::pair<int, int>> edges;
  for (int c = 0; c < copies; ++c) {
    add_block_edges(edges, 6 * c);
    if (c + 1 < copies) edges.push_back({6 * c + 5, 6 * (c + 1) + 2});  // v4 -- next v1
  }
  return build_graph(6 * copies, edges);
}

NaesatReduction reduce_naesat(const CnfFormula& f) {
  NaesatReduction r;
  r.formula = f;
  const int n = f.variable_count;
  std::vector<int> pos(n, 0), neg(n, 0);
  for (const auto& cl : f.clauses)
    for (int lit : cl) (lit > 0 ? pos : neg)[std::abs(lit) - 1]++;

  std::vector<int> copies(n), base(n);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    const int occ = pos[i] + neg[i];
    copies[i] = std::max({1, ceil_half(occ - 2), ceil_half(std::max(pos[i], neg[i]) - 1)});
    base[i] = next;
    next += 6 * copies[i];
  }
  std::vector<std::pair<int, int>> edges;
  r.spine.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < copies[i]; ++c) {
      add_block_edges(edges, base[i] + 6 * c);
      if (c + 1 < copies[i]) edges.push_back({base[i] + 6 * c + 5, base[i] + 6 * (c + 1) + 2});
      for (int j = 2; j <= 5; ++j) r.spine[i].push_back(base[i] + 6 * c + j);
    }
  }
  const int m = static_cast<int>(f.clauses.size());
  for (int j = 0; j < m; ++j) {
    std::array<int, 3> tri{next, next + 1, next + 2};
    next += 3;
    edges.push_back({tri[0], tri[1]});
    edges.push_back({tri[1], tri[2]});
    edges.push_back({tri[0], tri[2]});
    r.clause_vertex.push_back(tri);
  }

  std::vector<int> degree(next, 0);
  for (auto [a, b] : edges) {
    degree[a]++;
    degree[b]++;
  }
  // Attach each clause vertex to the first chain vertex of the right parity
  // that still has room under the degree-5 cap. Positive literals use even
  // 1-based positions, negative ones odd.
  for (int j = 0; j < m; ++j) {
    std::array<int, 3> att{-1, -1, -1};
    for (int t = 0; t < 3; ++t) {
      const int lit = f.clauses[j][t];
      const int var = std::abs(lit) - 1;
      const int start = lit > 0 ? 1 : 0;  // 0-based index parity on the spine
      for (std::size_t q = start; q < r.spine[var].size(); q += 2) {
        const int v = r.spine[var][q];
        if (degree[v] < 5) {
          att[t] = v;
          break;
        }
      }
      if (att[t] < 0) throw std::logic_error("chain has no room for an attachment");
      edges.push_back({r.clause_vertex[j][t], att[t]});
      degree[att[t]]++;
      degree[r.clause_vertex[j][t]]++;
    }
    r.attachment.push_back(att);
  }
  r.graph = build_graph(next, edges);
  if (r.graph.max_degree() > 5) throw std::logic_error("reduction exceeded maximum degree 5");
  return r;
}

Coloring assignment_to_coloring(const NaesatReduction& r, const std::vector<bool>& assignment) {
  if (assignment.size() != static_cast<std::size_t>(r.formula.variable_count))
    throw std::invalid_argument("assignment length must match the variable count");
  std::vector<int> colors(r.graph.vertex_count, -1);
  for (int i = 0; i < r.formula.variable_count; ++i) {
    // Truth shows at even 1-based spine positions: white (0) means true.
    const int even_color = assignment[i] ? 0 : 1;
    for (std::size_t q = 0; q < r.spine[i].size(); ++q)
      colors[r.spine[i][q]] = q % 2 == 1 ? even_color : 1 - even_color;
    // Poles of every block: u1 white, u2 gray.
    const int blocks = static_cast<int>(r.spine[i].size()) / 4;
    const int base = r.spine[i][0] - 2;
    for (int c = 0; c < blocks; ++c) {
      colors[base + 6 * c + 0] = 0;
      colors[base + 6 * c + 1] = 1;
    }
  }
  for (std::size_t j = 0; j < r.clause_vertex.size(); ++j)
    for (int t = 0; t < 3; ++t) {
      const int lit = r.formula.clauses[j][t];
      const bool value = (lit > 0) == assignment[std::abs(lit) - 1];
      colors[r.clause_vertex[j][t]] = value ? 1 : 0;  // gray marks a true literal
    }
  Coloring out{colors, 2};
  // For a not-all-equal satisfying assignment the construction is always a
  // valid certificate; otherwise the coloring is emitted as-is and the caller
  // sees it fail validation.
  if (nae_satisfies(r.formula, assignment) && !validate(r.graph, out, 2, 2).valid)
    throw std::logic_error("certificate coloring is invalid");
  return out;
}

std::vector<bool> coloring_to_assignment(const NaesatReduction& r, const Coloring& c) {
  if (!validate(r.graph, c, 2, 2).valid)
    throw std::invalid_argument("coloring must be valid with star components");
  std::vector<bool> assignment(r.formula.variable_count);
  for (int i = 0; i < r.formula.variable_count; ++i)
    assignment[i] = c.colors[r.spine[i][1]] == 0;
  if (!nae_satisfies(r.formula, assignment))
    throw std::logic_error("extracted assignment fails a clause");
  return assignment;
}

CliqueAttachment reduce_three_coloring(const Graph& g) {
  CliqueAttachment r;
  r.original_vertex_count = g.vertex_count;
  std::vector<std::pair<int, int>> edges = g.edges;
  int next = g.vertex_count;
  for (int v = 0; v < g.vertex_count; ++v) {
    std::array<int, 5> mates;
    for (int j = 0; j < 5; ++j) mates[j] = next++;
    std::vector<int> clique{v, mates[0], mates[1], mates[2], mates[3], mates[4]};
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b) edges.push_back({clique[a], clique[b]});
    r.added.push_back(mates);
  }
  r.graph = build_graph(next, edges);
  return r;
}

namespace {

// The original graph is the part of the reduction output among the first
// original_vertex_count vertices.
Graph original_of(const CliqueAttachment& r) {
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : r.graph.edges)
    if (a < r.original_vertex_count && b < r.original_vertex_count) edges.push_back({a, b});
  return build_graph(r.original_vertex_count, edges);
}

}  // namespace

Coloring lift_three_coloring(const CliqueAttachment& r, const Coloring& proper) {
  Graph original = original_of(r);
  if (!validate(original, proper, 3, 0).valid)
    throw std::invalid_argument("input must be a proper 3-coloring of the original graph");
  std::vector<int> colors(r.graph.vertex_count, -1);
  for (int v = 0; v < r.original_vertex_count; ++v) {
    const int c = proper.colors[v];
    colors[v] = c;
    const auto& m = r.added[v];
    colors[m[0]] = c;
    colors[m[1]] = colors[m[2]] = (c + 1) % 3;
    colors[m[3]] = colors[m[4]] = (c + 2) % 3;
  }
  Coloring out{colors, 3};
  if (!validate(r.graph, out, 3, 2).valid)
    throw std::logic_error("lifted coloring is invalid");
  return out;
}

Coloring extract_three_coloring(const CliqueAttachment& r, const Coloring& c) {
  if (!validate(r.graph, c, 3, 2).valid)
    throw std::invalid_argument("coloring must be valid with star components");
  std::vector<int> colors(c.colors.begin(), c.colors.begin() + r.original_vertex_count);
  Coloring out{colors, 3};
  if (!validate(original_of(r), out, 3, 0).valid)
    throw std::logic_error("extracted coloring is not proper");
  return out;
}

Graph grid_clause_gadget() {
  return build_graph(7, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}, {6, 0}, {6, 5}});
}

}  // namespace starcol
