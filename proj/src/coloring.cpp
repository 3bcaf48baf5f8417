#include "starcol/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace starcol {

namespace {

// BFS over same-colored edges from `start`, returning the component's
// vertices in visit order.
std::vector<int> mono_component_of(const Graph& g, const std::vector<int>& colors, int start) {
  std::vector<int> comp{start}, queue{start};
  std::vector<char> seen(g.vertex_count, 0);
  seen[start] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    int v = queue[q];
    for (int w : g.adj[v])
      if (!seen[w] && colors[w] == colors[v]) {
        seen[w] = 1;
        comp.push_back(w);
        queue.push_back(w);
      }
  }
  return comp;
}

// Finds a cycle in the subgraph induced by `comp` (all same color), assuming
// one exists; returns its vertices in cycle order.
std::vector<int> find_mono_cycle(const Graph& g, const std::vector<int>& colors,
                                 const std::vector<int>& comp) {
  std::vector<int> parent(g.vertex_count, -2);
  std::vector<int> stack{comp[0]};
  parent[comp[0]] = -1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.adj[v]) {
      if (colors[w] != colors[v]) continue;
      if (parent[w] == -2) {
        parent[w] = v;
        stack.push_back(w);
      } else if (w != parent[v]) {
        // back edge (v, w): walk both tails up to their meeting point
        std::vector<int> va, wa;
        for (int x = v; x != -1; x = parent[x]) va.push_back(x);
        for (int x = w; x != -1; x = parent[x]) wa.push_back(x);
        std::reverse(va.begin(), va.end());
        std::reverse(wa.begin(), wa.end());
        std::size_t i = 0;
        while (i + 1 < va.size() && i + 1 < wa.size() && va[i + 1] == wa[i + 1]) ++i;
        std::vector<int> cycle(va.begin() + i, va.end());
        for (std::size_t j = wa.size(); j-- > i + 1;) cycle.push_back(wa[j]);
        return cycle;
      }
    }
  }
  return {};
}

// Longest-path endpoints of a tree component via double BFS; used to extract
// a path witness of lambda+2 vertices when the diameter is too large.
std::vector<int> find_mono_path(const Graph& g, const std::vector<int>& colors,
                                const std::vector<int>& comp, int length) {
  auto bfs = [&](int start, std::vector<int>& parent) {
    parent.assign(g.vertex_count, -2);
    parent[start] = -1;
    std::vector<int> queue{start};
    int last = start;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      int v = queue[q];
      last = v;
      for (int w : g.adj[v])
        if (colors[w] == colors[v] && parent[w] == -2) {
          parent[w] = v;
          queue.push_back(w);
        }
    }
    return last;
  };
  std::vector<int> parent;
  int a = bfs(comp[0], parent);
  int b = bfs(a, parent);
  std::vector<int> path;
  for (int x = b; x != -1; x = parent[x]) path.push_back(x);
  path.resize(length);
  return path;
}

}  // namespace

Verdict validate(const Graph& g, const Coloring& c, int kappa, int lambda) {
  if (lambda < 0 || lambda > 2) throw std::invalid_argument("lambda must be 0, 1 or 2");
  if (kappa < 1) throw std::invalid_argument("kappa must be positive");
  if (static_cast<int>(c.colors.size()) != g.vertex_count)
    throw std::invalid_argument("coloring size does not match vertex count");
  Verdict verdict;
  for (int v = 0; v < g.vertex_count; ++v)
    if (c.colors[v] < 0 || c.colors[v] >= kappa) {
      verdict.valid = false;
      verdict.kind = ViolationKind::ColorOutOfRange;
      verdict.witness = {v};
      return verdict;
    }
  std::vector<char> done(g.vertex_count, 0);
  for (int s = 0; s < g.vertex_count; ++s) {
    if (done[s]) continue;
    auto comp = mono_component_of(g, c.colors, s);
    for (int v : comp) done[v] = 1;
    int internal_edges = 0;
    for (int v : comp)
      for (int w : g.adj[v])
        if (c.colors[w] == c.colors[v]) ++internal_edges;
    internal_edges /= 2;
    if (internal_edges >= static_cast<int>(comp.size())) {
      verdict.valid = false;
      verdict.kind = ViolationKind::MonochromaticCycle;
      verdict.witness = find_mono_cycle(g, c.colors, comp);
      return verdict;
    }
    // acyclic: diameter <= lambda means size <= 1 (lambda 0), size <= 2
    // (lambda 1), or a star (lambda 2)
    bool ok;
    if (lambda == 0)
      ok = comp.size() <= 1;
    else if (lambda == 1)
      ok = comp.size() <= 2;
    else {
      ok = comp.size() <= 2;
      if (!ok)
        for (int v : comp) {
          int mono_deg = 0;
          for (int w : g.adj[v])
            if (c.colors[w] == c.colors[v]) ++mono_deg;
          if (mono_deg + 1 == static_cast<int>(comp.size())) {
            ok = true;  // v is adjacent to every other component vertex
            break;
          }
        }
    }
    if (!ok) {
      verdict.valid = false;
      verdict.kind = ViolationKind::PathTooLong;
      verdict.witness = find_mono_path(g, c.colors, comp, lambda + 2);
      return verdict;
    }
  }
  return verdict;
}

std::vector<MonoComponent> monochromatic_components(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.vertex_count)
    throw std::invalid_argument("coloring size does not match vertex count");
  std::vector<MonoComponent> result;
  std::vector<char> done(g.vertex_count, 0);
  for (int s = 0; s < g.vertex_count; ++s) {
    if (done[s]) continue;
    auto verts = mono_component_of(g, c.colors, s);
    for (int v : verts) done[v] = 1;
    std::sort(verts.begin(), verts.end());
    MonoComponent comp;
    comp.color = c.colors[s];
    for (int v : verts)
      for (int w : g.adj[v])
        if (v < w && c.colors[w] == c.colors[v]) comp.edges.emplace_back(v, w);
    comp.vertices = std::move(verts);
    std::sort(comp.edges.begin(), comp.edges.end());
    result.push_back(std::move(comp));
  }
  return result;
}

Role role_of(const Graph& g, const Coloring& c, int v, int partner) {
  if (!g.has_edge(v, partner)) throw std::invalid_argument("role_of requires an edge (v, partner)");
  if (static_cast<int>(c.colors.size()) != g.vertex_count)
    throw std::invalid_argument("coloring size does not match vertex count");
  auto mono_neighbors = [&](int x) {
    std::vector<int> result;
    for (int w : g.adj[x])
      if (c.colors[w] == c.colors[x]) result.push_back(w);
    return result;
  };
  auto mine = mono_neighbors(v);
  // star check on v's component: some vertex adjacent to all others, acyclic
  auto comp = mono_component_of(g, c.colors, v);
  if (comp.size() > 2) {
    int internal_edges = 0;
    bool has_center = false;
    for (int x : comp) {
      auto nb = mono_neighbors(x);
      internal_edges += static_cast<int>(nb.size());
      if (nb.size() + 1 == comp.size()) has_center = true;
    }
    if (internal_edges / 2 != static_cast<int>(comp.size()) - 1 || !has_center)
      throw std::invalid_argument("monochromatic component of v is not a star");
  }
  if (mine.empty()) return Role::Isolated;
  if (mine.size() >= 2) return Role::Center;
  int mate = mine[0];
  int mate_degree = static_cast<int>(mono_neighbors(mate).size());
  if (mate_degree >= 2) return Role::Leaf;
  return mate == partner ? Role::Undefined : Role::Center;
}

}  // namespace starcol
