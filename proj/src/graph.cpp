#include "starcol/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace starcol {

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) return false;
  const auto& a = adj[u];
  return std::binary_search(a.begin(), a.end(), v);
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  Graph g;
  g.vertex_count = vertex_count;
  g.edges.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    g.edges.emplace_back(u, v);
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  g.adj.assign(vertex_count, {});
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  return g;
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return build_graph(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return build_graph(n, e);
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return build_graph(n, e);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.vertex_count, 0);
  for (int s = 0; s < g.vertex_count; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count <= 1) return true;
  return connected_components(g).size() == 1;
}

InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw std::invalid_argument("duplicate vertex in induced subgraph request");
  std::vector<int> index(g.vertex_count, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= g.vertex_count) throw std::invalid_argument("vertex out of range");
    index[v] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges)
    if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
  InducedSubgraph result;
  result.graph = build_graph(static_cast<int>(vertices.size()), edges);
  result.to_original = std::move(vertices);
  return result;
}

namespace {

// Iterative lowpoint DFS computing biconnected components and cut vertices.
struct block_finder {
  const Graph& g;
  std::vector<int> disc, low, parent;
  std::vector<char> is_cut;
  std::vector<std::pair<int, int>> edge_stack;
  std::vector<std::vector<std::pair<int, int>>> blocks;
  int timer = 0;

  explicit block_finder(const Graph& graph)
      : g(graph),
        disc(graph.vertex_count, -1),
        low(graph.vertex_count, 0),
        parent(graph.vertex_count, -1),
        is_cut(graph.vertex_count, 0) {}

  void pop_block(std::pair<int, int> until) {
    std::vector<std::pair<int, int>> block;
    while (true) {
      auto e = edge_stack.back();
      edge_stack.pop_back();
      block.push_back(e);
      if (e == until) break;
    }
    for (auto& e : block)
      if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }

  void run(int root) {
    struct frame {
      int v;
      std::size_t next_child;
    };
    std::vector<frame> stack{{root, 0}};
    disc[root] = low[root] = timer++;
    int root_children = 0;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      if (idx < g.adj[v].size()) {
        int w = g.adj[v][idx++];
        if (w == parent[v]) continue;
        if (disc[w] == -1) {
          parent[w] = v;
          edge_stack.emplace_back(v, w);
          disc[w] = low[w] = timer++;
          if (v == root) ++root_children;
          stack.push_back({w, 0});
        } else if (disc[w] < disc[v]) {
          edge_stack.emplace_back(v, w);
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().v;
          low[p] = std::min(low[p], low[v]);
          if (low[v] >= disc[p]) {
            if (p != root) is_cut[p] = 1;
            pop_block({p, v});
          }
        }
      }
    }
    if (root_children >= 2) is_cut[root] = 1;
  }
};

}  // namespace

BlockDecomposition biconnected_components(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("biconnected_components requires a connected graph");
  block_finder finder(g);
  if (g.vertex_count > 0) finder.run(0);
  std::sort(finder.blocks.begin(), finder.blocks.end());
  BlockDecomposition result;
  result.blocks = std::move(finder.blocks);
  for (int v = 0; v < g.vertex_count; ++v)
    if (finder.is_cut[v]) result.cut_vertices.push_back(v);
  return result;
}

bool is_biconnected(const Graph& g) {
  if (!is_connected(g)) return false;
  if (g.vertex_count <= 2) return true;
  return biconnected_components(g).blocks.size() == 1;
}

}  // namespace starcol
