#include "starcol/exact_solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace starcol {

namespace {

struct search_state {
  const Graph& g;
  int kappa, lambda;
  std::uint64_t node_limit;
  std::chrono::steady_clock::time_point deadline;
  bool has_deadline;
  std::uint64_t nodes = 0;
  bool out_of_budget = false;
  std::vector<int> color;     // -1 while unassigned
  std::vector<int> mono_deg;  // same-colored assigned neighbors

  search_state(const Graph& graph, int k, int l, const SolveBudget& budget)
      : g(graph), kappa(k), lambda(l), node_limit(budget.node_limit) {
    has_deadline = budget.time_limit_seconds > 0;
    if (has_deadline)
      deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(budget.time_limit_seconds));
    color.assign(g.vertex_count, -1);
    mono_deg.assign(g.vertex_count, 0);
  }

  bool budget_exceeded() {
    if (nodes >= node_limit) return true;
    if (has_deadline && (nodes & 1023) == 0 && std::chrono::steady_clock::now() >= deadline)
      return true;
    return false;
  }

  // Whether assigning color c to v keeps every monochromatic component of
  // the assigned subgraph a valid shape: a star for lambda 2, an edge for
  // lambda 1, a single vertex for lambda 0.
  bool placement_ok(int v, int c) const {
    int same = 0;
    int mate = -1;
    for (int w : g.adj[v])
      if (color[w] == c) {
        ++same;
        mate = w;
        if (lambda == 0) return false;
      }
    if (same == 0) return true;
    if (lambda == 1) return same == 1 && mono_deg[mate] == 0;
    if (same == 1) {
      // v hangs off mate: mate must be able to serve as its star's center,
      // i.e. every same-colored neighbor of mate is itself a degree-1 leaf
      for (int z : g.adj[mate])
        if (color[z] == c && mono_deg[z] != 1) return false;
      return true;
    }
    // v becomes the center of a merged star: all its same-colored neighbors
    // must be isolated so far (this also rules out cycles through v)
    for (int w : g.adj[v])
      if (color[w] == c && mono_deg[w] != 0) return false;
    return true;
  }

  void assign(int v, int c) {
    color[v] = c;
    int same = 0;
    for (int w : g.adj[v])
      if (color[w] == c) {
        ++mono_deg[w];
        ++same;
      }
    mono_deg[v] = same;
  }

  void unassign(int v) {
    int c = color[v];
    color[v] = -1;
    for (int w : g.adj[v])
      if (color[w] == c) --mono_deg[w];
    mono_deg[v] = 0;
  }

  // Backtracking over order[pos..]; the first vertex is pinned to color 0.
  bool search(const std::vector<int>& order, std::size_t pos) {
    if (pos == order.size()) return true;
    int v = order[pos];
    int limit = pos == 0 ? 1 : kappa;
    for (int c = 0; c < limit; ++c) {
      if (budget_exceeded()) {
        out_of_budget = true;
        return false;
      }
      ++nodes;
      if (!placement_ok(v, c)) continue;
      assign(v, c);
      if (search(order, pos + 1)) return true;
      unassign(v);
      if (out_of_budget) return false;
    }
    return false;
  }
};

}  // namespace

SolveResult decide(const Graph& g, int kappa, int lambda, const SolveBudget& budget) {
  if (lambda < 0 || lambda > 2) throw std::invalid_argument("lambda must be 0, 1 or 2");
  if (kappa < 1) throw std::invalid_argument("kappa must be positive");
  search_state state(g, kappa, lambda, budget);
  SolveResult result;
  for (const auto& comp : connected_components(g)) {
    std::vector<int> order = comp;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
      return a < b;
    });
    bool found = state.search(order, 0);
    result.nodes_explored = state.nodes;
    if (state.out_of_budget) {
      result.status = SolveStatus::Unknown;
      return result;
    }
    if (!found) {
      result.status = SolveStatus::Uncolorable;
      return result;
    }
  }
  result.status = SolveStatus::Colorable;
  Coloring c;
  c.color_count = kappa;
  c.colors = state.color;
  if (g.vertex_count > 0 && !validate(g, c, kappa, lambda).valid)
    throw std::logic_error("solver produced an invalid certificate");
  result.coloring = std::move(c);
  result.nodes_explored = state.nodes;
  return result;
}

std::vector<Coloring> enumerate_colorings(const Graph& g, int kappa, int lambda) {
  if (lambda < 0 || lambda > 2) throw std::invalid_argument("lambda must be 0, 1 or 2");
  if (kappa < 1) throw std::invalid_argument("kappa must be positive");
  double total = std::pow(static_cast<double>(kappa), g.vertex_count);
  if (total > 1e7) throw std::invalid_argument("enumeration space exceeds 10^7 colorings");
  std::vector<Coloring> result;
  Coloring c;
  c.color_count = kappa;
  c.colors.assign(g.vertex_count, 0);
  while (true) {
    if (validate(g, c, kappa, lambda).valid) result.push_back(c);
    int pos = g.vertex_count - 1;  // odometer, vertex 0 most significant
    while (pos >= 0 && c.colors[pos] == kappa - 1) c.colors[pos--] = 0;
    if (pos < 0) break;
    ++c.colors[pos];
  }
  return result;
}

}  // namespace starcol
