#pragma once

#include <utility>
#include <vector>

namespace starcol {

// Simple undirected graph on vertices 0..vertex_count-1. Edges are stored
// normalized (u < v), sorted, and deduplicated; adj lists are sorted.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adj;

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  int max_degree() const;
};

// Builds a graph, normalizing and deduplicating edges.
// Throws std::invalid_argument on out-of-range endpoints or self-loops.
Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

bool is_connected(const Graph& g);

// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Subgraph induced by `vertices` (need not be sorted; duplicates rejected).
// Returns the subgraph, whose vertex i corresponds to original vertices[i]
// after sorting.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_original;  // subgraph vertex -> original vertex
};
InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> vertices);

// Biconnected components of a connected graph, as edge lists. Blocks are
// ordered by their smallest edge. A bridge forms its own single-edge block.
struct BlockDecomposition {
  std::vector<std::vector<std::pair<int, int>>> blocks;  // edges per block
  std::vector<int> cut_vertices;                         // sorted
};
BlockDecomposition biconnected_components(const Graph& g);

// True iff g is connected and has no cut vertex (single vertices and single
// edges count as biconnected).
bool is_biconnected(const Graph& g);

}  // namespace starcol
