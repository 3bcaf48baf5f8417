#include "starcol/embedding.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace starcol {

namespace {

// Hamiltonian outer cycle of a biconnected outerplanar block, or nullopt.
//
// Repeatedly removes a degree-2 vertex and closes the gap with a virtual
// edge, down to a triangle. The removals are then replayed in reverse into a
// growing cycle: a removed vertex must land between its two neighbors, which
// must be consecutive on the cycle at that point. For outerplanar inputs the
// outer cycle is unique and the replay always succeeds; for non-outerplanar
// inputs either the elimination gets stuck or some reinsertion fails. The
// caller re-verifies the result, so acceptance never relies on this argument.
std::optional<std::vector<int>> block_outer_cycle(const Graph& g) {
  int n = g.vertex_count;
  if (n < 3) return std::nullopt;
  std::vector<std::set<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = {g.adj[v].begin(), g.adj[v].end()};
  std::vector<char> alive(n, 1);
  struct removal {
    int v, u, w;
  };
  std::vector<removal> removals;
  int remaining = n;
  while (remaining > 3) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (alive[v] && adj[v].size() == 2) {
        pick = v;
        break;
      }
    if (pick < 0) return std::nullopt;
    auto it = adj[pick].begin();
    int u = *it++;
    int w = *it;
    removals.push_back({pick, u, w});
    alive[pick] = 0;
    --remaining;
    adj[u].erase(pick);
    adj[w].erase(pick);
    adj[u].insert(w);
    adj[w].insert(u);
  }
  std::vector<int> cycle;
  for (int v = 0; v < n; ++v)
    if (alive[v]) cycle.push_back(v);
  for (int i = 0; i < 3; ++i)
    if (!adj[cycle[i]].count(cycle[(i + 1) % 3])) return std::nullopt;
  for (auto it = removals.rbegin(); it != removals.rend(); ++it) {
    int len = static_cast<int>(cycle.size());
    int pos = -1;
    for (int i = 0; i < len; ++i) {
      int a = cycle[i], b = cycle[(i + 1) % len];
      if ((a == it->u && b == it->w) || (a == it->w && b == it->u)) {
        pos = i;
        break;
      }
    }
    if (pos < 0) return std::nullopt;
    cycle.insert(cycle.begin() + pos + 1, it->v);
  }
  return cycle;
}

// True iff the chords of g are pairwise non-crossing with respect to the
// cyclic order `pos` and every edge respects it. Used to certify acceptance.
bool chords_non_crossing(const Graph& g, const std::vector<int>& cycle) {
  int n = g.vertex_count;
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) pos[cycle[i]] = i;
  std::vector<std::pair<int, int>> chords;
  for (auto [u, v] : g.edges) {
    int a = pos[u], b = pos[v];
    if (a > b) std::swap(a, b);
    if (b - a == 1 || (a == 0 && b == n - 1)) continue;  // boundary edge
    chords.emplace_back(a, b);
  }
  for (std::size_t i = 0; i < chords.size(); ++i)
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      auto [a, b] = chords[i];
      auto [c, d] = chords[j];
      bool c_inside = a < c && c < b;
      bool d_inside = a < d && d < b;
      if (c_inside != d_inside && c != a && c != b && d != a && d != b) return false;
    }
  return true;
}

// Inner faces of a biconnected outerplanar block via rotation-system face
// tracing. Rotations sort each vertex's neighbors by cyclic offset along the
// outer cycle; the orbit through the dart cycle[1] -> cycle[0] is the outer
// face and is dropped.
std::vector<std::vector<int>> trace_inner_faces(const Graph& g, const std::vector<int>& cycle) {
  int n = g.vertex_count;
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[cycle[i]] = i;
  std::vector<std::vector<int>> rotation(n);
  for (int v = 0; v < n; ++v) {
    rotation[v] = g.adj[v];
    std::sort(rotation[v].begin(), rotation[v].end(), [&](int a, int b) {
      return (pos[a] - pos[v] + n) % n < (pos[b] - pos[v] + n) % n;
    });
  }
  auto rotation_index = [&](int v, int w) {
    for (std::size_t i = 0; i < rotation[v].size(); ++i)
      if (rotation[v][i] == w) return static_cast<int>(i);
    return -1;
  };
  std::map<std::pair<int, int>, char> used;  // dart (tail, head) visited
  for (auto [u, v] : g.edges) {
    used[{u, v}] = 0;
    used[{v, u}] = 0;
  }
  auto trace = [&](int tail, int head) {
    std::vector<int> face;
    int u = tail, v = head;
    while (!used[{u, v}]) {
      used[{u, v}] = 1;
      face.push_back(v);
      int idx = rotation_index(v, u);
      int deg = static_cast<int>(rotation[v].size());
      int next = rotation[v][(idx - 1 + deg) % deg];
      u = v;
      v = next;
    }
    return face;
  };
  trace(cycle[1], cycle[0]);  // outer face, discarded
  std::vector<std::vector<int>> faces;
  for (int v = 0; v < n; ++v)
    for (int w : rotation[v])
      if (!used[{v, w}]) {
        auto face = trace(v, w);
        // canonical rotation: smallest vertex first, direction as traced
        auto it = std::min_element(face.begin(), face.end());
        std::rotate(face.begin(), it, face.end());
        faces.push_back(std::move(face));
      }
  std::sort(faces.begin(), faces.end());
  return faces;
}

struct block_embedding {
  std::vector<int> cycle;                 // outer boundary (cycle order)
  std::vector<std::vector<int>> faces;
};

// Embedding of one biconnected block given by its edge list, or nullopt.
std::optional<block_embedding> embed_block(const Graph& g,
                                           const std::vector<std::pair<int, int>>& block_edges) {
  block_embedding emb;
  if (block_edges.size() == 1) {
    emb.cycle = {block_edges[0].first, block_edges[0].second};
    return emb;
  }
  std::vector<int> verts;
  for (auto [u, v] : block_edges) {
    verts.push_back(u);
    verts.push_back(v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<int> index(g.vertex_count, -1);
  for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> local_edges;
  for (auto [u, v] : block_edges) local_edges.emplace_back(index[u], index[v]);
  Graph local = build_graph(static_cast<int>(verts.size()), local_edges);
  if (local.edge_count() > 2 * local.vertex_count - 3) return std::nullopt;
  auto cycle = block_outer_cycle(local);
  if (!cycle) return std::nullopt;
  if (!chords_non_crossing(local, *cycle)) return std::nullopt;
  auto faces = trace_inner_faces(local, *cycle);
  // certify: Euler count and simple face cycles
  if (static_cast<int>(faces.size()) != local.edge_count() - local.vertex_count + 1)
    return std::nullopt;
  for (const auto& f : faces) {
    std::vector<int> sorted_face = f;
    std::sort(sorted_face.begin(), sorted_face.end());
    if (std::adjacent_find(sorted_face.begin(), sorted_face.end()) != sorted_face.end())
      return std::nullopt;
  }
  for (int& v : *cycle) v = verts[v];
  for (auto& f : faces)
    for (int& v : f) v = verts[v];
  emb.cycle = std::move(*cycle);
  emb.faces = std::move(faces);
  return emb;
}

}  // namespace

std::optional<OuterEmbedding> recognize_outerplanar(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("recognize_outerplanar requires a connected graph");
  if (g.vertex_count == 0) return std::nullopt;
  OuterEmbedding result;
  if (g.vertex_count == 1) {
    result.outer_cycle = {0};
    return result;
  }
  if (g.edge_count() > 2 * g.vertex_count - 3) return std::nullopt;
  auto decomposition = biconnected_components(g);
  std::vector<block_embedding> blocks;
  // vertex -> blocks containing it
  std::vector<std::vector<int>> blocks_at(g.vertex_count);
  for (std::size_t b = 0; b < decomposition.blocks.size(); ++b) {
    auto emb = embed_block(g, decomposition.blocks[b]);
    if (!emb) return std::nullopt;
    std::vector<int> verts = emb->cycle;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts) blocks_at[v].push_back(static_cast<int>(b));
    blocks.push_back(std::move(*emb));
    for (const auto& f : blocks.back().faces) result.inner_faces.push_back(f);
  }
  std::sort(result.inner_faces.begin(), result.inner_faces.end());

  // Stitch the outer boundary walk over the block-cut structure: whenever the
  // walk of one block passes a cut vertex, the walks of the other blocks at
  // that vertex are spliced in.
  std::vector<char> block_done(blocks.size(), 0);
  std::vector<int>& walk = result.outer_cycle;
  // Appends the boundary walk of block b entered at `entry`, excluding the
  // leading entry vertex itself (the caller has already emitted it).
  auto emit = [&](auto&& self, int b, int entry) -> void {
    block_done[b] = 1;
    const auto& cycle = blocks[b].cycle;
    int len = static_cast<int>(cycle.size());
    int start = 0;
    while (cycle[start] != entry) ++start;
    for (int i = 1; i < len; ++i) {
      int v = cycle[(start + i) % len];
      walk.push_back(v);
      for (int nb : blocks_at[v])
        if (!block_done[nb]) {
          self(self, nb, v);
          walk.push_back(v);
        }
    }
  };
  walk.push_back(0);
  for (int nb : blocks_at[0])
    if (!block_done[nb]) {
      emit(emit, nb, 0);
      walk.push_back(0);
    }
  walk.pop_back();  // closing return to the start vertex
  return result;
}

bool is_outerplanar(const Graph& g) {
  if (g.vertex_count == 0) return true;
  for (const auto& comp : connected_components(g)) {
    auto sub = induced_subgraph(g, comp);
    if (!recognize_outerplanar(sub.graph)) return false;
  }
  return true;
}

WeakDualTree weak_dual(const Graph& g, const OuterEmbedding& embedding) {
  if (!is_biconnected(g) || g.vertex_count < 3)
    throw std::invalid_argument("weak_dual requires a biconnected graph on >= 3 vertices");
  const auto& faces = embedding.inner_faces;
  int f = static_cast<int>(faces.size());
  if (f == 0) throw std::invalid_argument("weak_dual requires at least one inner face");

  // map each edge to the faces whose boundary contains it
  std::map<std::pair<int, int>, std::vector<int>> edge_faces;
  for (int i = 0; i < f; ++i) {
    const auto& face = faces[i];
    int s = static_cast<int>(face.size());
    for (int j = 0; j < s; ++j) {
      int u = face[j], v = face[(j + 1) % s];
      if (u > v) std::swap(u, v);
      edge_faces[{u, v}].push_back(i);
    }
  }
  std::vector<std::set<int>> dual_adj(f);
  for (const auto& [edge, fs] : edge_faces) {
    if (fs.size() > 2) throw std::invalid_argument("embedding has an edge on more than two faces");
    if (fs.size() == 2) {
      dual_adj[fs[0]].insert(fs[1]);
      dual_adj[fs[1]].insert(fs[0]);
    }
  }

  WeakDualTree tree;
  tree.face = faces;
  tree.parent.assign(f, -1);
  tree.children.assign(f, {});
  tree.attachment_edge.assign(f, {-1, -1});
  tree.root = 0;
  for (int i = 0; i < f; ++i)
    if (dual_adj[i].size() <= 1) {
      tree.root = i;
      break;
    }

  // BFS orientation of the tree
  std::vector<int> order{tree.root};
  std::vector<char> seen(f, 0);
  seen[tree.root] = 1;
  for (std::size_t q = 0; q < order.size(); ++q) {
    int x = order[q];
    for (int y : dual_adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        tree.parent[y] = x;
        tree.children[x].push_back(y);
        order.push_back(y);
      }
  }
  for (int i = 0; i < f; ++i)
    if (!seen[i]) throw std::invalid_argument("weak dual is not connected");

  // orientation convention: attachment edge (u, v) occurs in the face cycle
  // as consecutive pair (v, u), so the boundary walk from u around to v
  // avoids the edge itself
  auto orient = [&](int node, std::pair<int, int> edge) {
    const auto& face = faces[node];
    int s = static_cast<int>(face.size());
    for (int j = 0; j < s; ++j) {
      int a = face[j], b = face[(j + 1) % s];
      if (std::minmax(a, b) == std::minmax(edge.first, edge.second)) {
        tree.attachment_edge[node] = {b, a};
        return;
      }
    }
    throw std::logic_error("attachment edge not on face");
  };
  for (int i = 0; i < f; ++i) {
    if (i == tree.root) continue;
    // shared edge with parent
    std::pair<int, int> shared{-1, -1};
    const auto& face = faces[i];
    int s = static_cast<int>(face.size());
    for (int j = 0; j < s && shared.first < 0; ++j) {
      int u = face[j], v = face[(j + 1) % s];
      if (u > v) std::swap(u, v);
      const auto& fs = edge_faces[{u, v}];
      if (fs.size() == 2 && fs[0] + fs[1] - i == tree.parent[i]) shared = {u, v};
    }
    orient(i, shared);
  }
  {
    // root attachment: lexicographically smallest boundary edge of its face
    std::pair<int, int> best{-1, -1};
    const auto& face = faces[tree.root];
    int s = static_cast<int>(face.size());
    for (int j = 0; j < s; ++j) {
      int u = face[j], v = face[(j + 1) % s];
      if (u > v) std::swap(u, v);
      if (edge_faces[{u, v}].size() == 1)
        if (best.first < 0 || std::pair{u, v} < best) best = {u, v};
    }
    if (best.first < 0) throw std::logic_error("root face has no outer-boundary edge");
    orient(tree.root, best);
  }
  return tree;
}

Augmentation biconnect_augment(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("biconnect_augment requires a connected graph");
  Augmentation result;
  result.original_vertex_count = g.vertex_count;
  Graph cur = g;
  while (cur.vertex_count >= 3 && !is_biconnected(cur)) {
    const int c = biconnected_components(cur).cut_vertices.front();
    auto emb = recognize_outerplanar(cur);
    if (!emb) throw std::invalid_argument("biconnect_augment requires an outerplanar graph");
    // The outer boundary walk passes through c once per block. Bridging the
    // corridor around any one appearance with a fresh 3-edge path merges two
    // blocks and keeps every vertex on the outer face: the path can be drawn
    // just outside the corridor.
    const auto& walk = emb->outer_cycle;
    const int len = static_cast<int>(walk.size());
    int a = -1, b = -1;
    for (int i = 0; i < len; ++i)
      if (walk[i] == c) {
        a = walk[(i - 1 + len) % len];
        b = walk[(i + 1) % len];
        break;
      }
    if (a < 0) throw std::logic_error("cut vertex missing from the boundary walk");
    const int x = cur.vertex_count, y = cur.vertex_count + 1;
    auto edges = cur.edges;
    edges.emplace_back(a, x);
    edges.emplace_back(x, y);
    edges.emplace_back(y, b);
    cur = build_graph(cur.vertex_count + 2, edges);
  }
  result.graph = std::move(cur);
  return result;
}

}  // namespace starcol
