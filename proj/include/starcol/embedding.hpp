#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "starcol/graph.hpp"

namespace starcol {

// Planar embedding of an outerplanar graph with every vertex on the outer
// face. For a biconnected graph outer_cycle is the unique Hamiltonian cycle
// of the boundary; otherwise it is the closed outer boundary walk (cut
// vertices repeat). Each inner face is listed as its boundary cycle.
struct OuterEmbedding {
  std::vector<int> outer_cycle;
  std::vector<std::vector<int>> inner_faces;
};

// Returns an embedding iff g is outerplanar. Requires a connected graph
// (throws std::invalid_argument otherwise).
std::optional<OuterEmbedding> recognize_outerplanar(const Graph& g);

bool is_outerplanar(const Graph& g);

// Weak dual of a biconnected outerplanar graph: one node per inner face,
// nodes adjacent iff the faces share an edge. For outerplanar graphs this is
// a tree; it is rooted at a leaf face. Each non-root node stores the edge its
// face shares with its parent, oriented (u, v) so that walking the face
// boundary from u to v avoids that edge; the root stores an outer-boundary
// edge of its face with the same orientation convention.
struct WeakDualTree {
  int root = -1;
  std::vector<int> parent;                          // -1 at root
  std::vector<std::vector<int>> children;
  std::vector<std::pair<int, int>> attachment_edge; // per node, oriented
  std::vector<std::vector<int>> face;               // face boundary cycles
};

// Throws std::invalid_argument unless g is biconnected with >= 3 vertices.
WeakDualTree weak_dual(const Graph& g, const OuterEmbedding& embedding);

// Adds two-vertex paths between blocks sharing a cut vertex until the graph
// is biconnected. Preserves outerplanarity and (2,2)-colorability in both
// directions. Original vertices keep their ids.
struct Augmentation {
  Graph graph;
  int original_vertex_count = 0;
};
Augmentation biconnect_augment(const Graph& g);

}  // namespace starcol
