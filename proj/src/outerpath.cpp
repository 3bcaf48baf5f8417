#include "starcol/outerpath.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "starcol/embedding.hpp"
#include "starcol/exact_solver.hpp"

namespace starcol {
namespace {

std::pair<int, int> norm(int a, int b) { return std::minmax(a, b); }

bool dual_is_path(const WeakDualTree& dual) {
  for (std::size_t i = 0; i < dual.face.size(); ++i) {
    int deg = static_cast<int>(dual.children[i].size()) + (dual.parent[i] >= 0 ? 1 : 0);
    if (deg > 2) return false;
  }
  return true;
}

Graph triangulate_core(const Graph& g, const WeakDualTree& dual) {
  std::vector<std::pair<int, int>> edges = g.edges;
  for (std::size_t node = 0; node < dual.face.size(); ++node) {
    const auto& face = dual.face[node];
    const int s = static_cast<int>(face.size());
    if (s == 3) continue;
    std::vector<std::pair<int, int>> marked;
    if (static_cast<int>(node) != dual.root)
      marked.push_back(norm(dual.attachment_edge[node].first, dual.attachment_edge[node].second));
    for (int c : dual.children[node])
      marked.push_back(norm(dual.attachment_edge[c].first, dual.attachment_edge[c].second));
    if (marked.size() > 2) throw std::invalid_argument("graph is not an outerpath");
    std::sort(marked.begin(), marked.end());

    // Rotate the face so the first marked edge (if any) is (w[0], w[1]).
    std::vector<int> w = face;
    if (!marked.empty()) {
      int q = -1;
      for (int i = 0; i < s; ++i)
        if (norm(face[i], face[(i + 1) % s]) == marked[0]) q = i;
      if (q < 0) throw std::logic_error("marked edge not on face boundary");
      for (int i = 0; i < s; ++i) w[i] = face[(q + i) % s];
    }
    int b = s - 1;
    if (marked.size() == 2) {
      b = -1;
      for (int i = 1; i < s; ++i)
        if (norm(w[i], w[(i + 1) % s]) == marked[1]) b = i;
      if (b < 1) throw std::logic_error("second marked edge not on face boundary");
    }
    // Fan from w[0] up to w[b], then from w[b] over the rest. The end
    // triangles of the resulting strip contain the marked edges, so the dual
    // stays a path.
    for (int j = 2; j <= b; ++j) edges.push_back({w[0], w[j]});
    for (int j = b + 2; j <= s - 1; ++j) edges.push_back({w[b], w[j]});
  }
  return build_graph(g.vertex_count, edges);
}

// Faces of the dual path in end-to-end order, starting at the endpoint with
// the smaller node id.
std::vector<int> path_order(const WeakDualTree& dual) {
  const int t = static_cast<int>(dual.face.size());
  if (t == 1) return {0};
  std::vector<std::vector<int>> nbr(t);
  for (int v = 0; v < t; ++v)
    for (int c : dual.children[v]) {
      nbr[v].push_back(c);
      nbr[c].push_back(v);
    }
  int start = -1;
  for (int v = 0; v < t; ++v)
    if (nbr[v].size() == 1 && start < 0) start = v;
  std::vector<int> order{start};
  int prev = -1;
  while (static_cast<int>(order.size()) < t) {
    int cur = order.back(), nxt = -1;
    for (int w : nbr[cur])
      if (w != prev) nxt = w;
    if (nxt < 0) throw std::logic_error("dual path ended early");
    order.push_back(nxt);
    prev = cur;
  }
  return order;
}

std::vector<int> mono_neighbors(const Graph& g, const std::vector<int>& partial, int x) {
  std::vector<int> out;
  for (int w : g.adj[x])
    if (partial[w] >= 0 && partial[w] == partial[x]) out.push_back(w);
  return out;
}

bool center_like(const Graph& g, const std::vector<int>& partial, int x) {
  for (int w : mono_neighbors(g, partial, x))
    if (mono_neighbors(g, partial, w).size() != 1) return false;
  return true;
}

}  // namespace

Graph triangulate_outerpath(const Graph& g) {
  if (!is_biconnected(g) || g.vertex_count < 3)
    throw std::invalid_argument("graph must be biconnected");
  auto emb = recognize_outerplanar(g);
  if (!emb) throw std::invalid_argument("graph is not outerplanar");
  WeakDualTree dual = weak_dual(g, *emb);
  if (!dual_is_path(dual)) throw std::invalid_argument("graph is not an outerpath");
  return triangulate_core(g, dual);
}

SpineDecomposition spine_decompose(const Graph& g) {
  if (!is_biconnected(g) || g.vertex_count < 3)
    throw std::invalid_argument("graph must be biconnected");
  auto emb = recognize_outerplanar(g);
  if (!emb) throw std::invalid_argument("graph is not outerplanar");
  WeakDualTree dual = weak_dual(g, *emb);
  if (!dual_is_path(dual)) throw std::invalid_argument("graph is not an outerpath");
  for (const auto& face : dual.face)
    if (face.size() != 3) throw std::invalid_argument("graph must be inner-triangulated");
  const int t = static_cast<int>(dual.face.size());
  if (t < 3) throw std::invalid_argument("graph must have at least five vertices");

  std::vector<int> seq = path_order(dual);
  // Shared edge between consecutive triangles: their two common vertices.
  std::vector<std::pair<int, int>> shared(t - 1);
  for (int j = 0; j + 1 < t; ++j) {
    std::vector<int> a = dual.face[seq[j]], b = dual.face[seq[j + 1]], common;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (common.size() != 2) throw std::logic_error("adjacent faces must share one edge");
    shared[j] = {common[0], common[1]};
  }
  auto other = [](std::pair<int, int> e, int p) {
    if (e.first == p) return e.second;
    if (e.second == p) return e.first;
    throw std::logic_error("pivot not on shared edge");
  };
  // Pivot of the interior triangle at path position j: the vertex common to
  // its two shared edges.
  std::vector<int> pivot(t, -1);
  for (int j = 1; j + 1 < t; ++j) {
    const auto [a0, a1] = shared[j - 1];
    const auto [b0, b1] = shared[j];
    for (int x : {a0, a1})
      if (x == b0 || x == b1) pivot[j] = x;
    if (pivot[j] < 0) throw std::logic_error("interior face has no pivot");
  }

  auto third = [](const std::vector<int>& face, std::pair<int, int> e) {
    for (int v : face)
      if (v != e.first && v != e.second) return v;
    throw std::logic_error("triangle equals its shared edge");
  };
  const int t0 = third(dual.face[seq[0]], shared[0]);
  const int t1 = third(dual.face[seq[t - 1]], shared[t - 2]);

  SpineDecomposition dec;
  int j = 1;
  while (j + 1 < t) {
    int jb = j;
    while (jb + 1 + 1 < t && pivot[jb + 1] == pivot[j]) ++jb;
    const int p = pivot[j];
    std::vector<int> fan;
    if (dec.spine.empty()) fan.push_back(t0);
    for (int e = dec.spine.empty() ? j - 1 : j; e <= jb; ++e) fan.push_back(other(shared[e], p));
    dec.spine.push_back(p);
    dec.fans.push_back(std::move(fan));
    j = jb + 1;
  }
  dec.fans.back().push_back(t1);
  dec.spine.push_back(t1);
  dec.fans.emplace_back();

  // Structural checks: fans end at the next spine vertex, consecutive spine
  // vertices are adjacent, the pieces partition the vertex set, and the
  // proper spine is exactly the set of degree >= 4 vertices.
  const std::size_t m = dec.spine.size() - 1;
  std::vector<int> seen(g.vertex_count, 0);
  seen[dec.spine[0]]++;
  for (std::size_t i = 0; i < dec.fans.size(); ++i)
    for (int v : dec.fans[i]) seen[v]++;
  for (int v = 0; v < g.vertex_count; ++v)
    if (seen[v] != 1) throw std::logic_error("fans do not partition the vertex set");
  for (std::size_t i = 0; i < m; ++i) {
    if (dec.fans[i].empty() || dec.fans[i].back() != dec.spine[i + 1])
      throw std::logic_error("fan does not end at the next spine vertex");
    if (!g.has_edge(dec.spine[i], dec.spine[i + 1]))
      throw std::logic_error("consecutive spine vertices must be adjacent");
  }
  std::set<int> spine_heads(dec.spine.begin(), dec.spine.end() - 1), high;
  for (int v = 0; v < g.vertex_count; ++v)
    if (g.degree(v) >= 4) high.insert(v);
  if (spine_heads != high)
    throw std::logic_error("spine must consist of the high-degree vertices");
  return dec;
}

bool state_predicate(const Graph& g, const SpineDecomposition& dec,
                     const std::vector<int>& partial, int index, MachineState state) {
  const int k = static_cast<int>(dec.spine.size());
  if (index < 1 || index > k) return false;
  if (state == MachineState::Q0) {
    if (index != 1 || partial[dec.spine[0]] < 0) return false;
    for (int v = 0; v < g.vertex_count; ++v)
      if (v != dec.spine[0] && partial[v] >= 0) return false;
    return true;
  }
  if (index < 2) return false;
  const int vi = dec.spine[index - 1], vp = dec.spine[index - 2];
  if (partial[vi] < 0 || partial[vp] < 0) return false;
  const bool same = partial[vi] == partial[vp];
  const auto mono_p = mono_neighbors(g, partial, vp);
  const auto mono_i = mono_neighbors(g, partial, vi);
  const int fan_next = index <= k - 1 ? static_cast<int>(dec.fans[index - 1].size()) : 0;
  switch (state) {
    case MachineState::Q1:
      return !same && !mono_p.empty() && center_like(g, partial, vp) && mono_i.empty();
    case MachineState::Q2:
      return same && mono_p == std::vector<int>{vi} && mono_i == std::vector<int>{vp};
    case MachineState::Q3:
      return !same && mono_p.size() == 1 &&
             mono_neighbors(g, partial, mono_p[0]).size() >= 2 && mono_i.empty();
    case MachineState::Q4:
      return !same && !mono_p.empty() && center_like(g, partial, vp) && !mono_i.empty() &&
             center_like(g, partial, vi) && index < k && fan_next > 1;
    case MachineState::Q5:
      return same && mono_p.size() >= 2 && center_like(g, partial, vp) &&
             mono_i == std::vector<int>{vp} && index < k && fan_next == 1;
    default:
      return false;
  }
}

namespace {

// Colors fan g_1..g_s so that g_s gets `last` and colors alternate backwards.
void alternate_fill(std::vector<int>& colors, const std::vector<int>& fan, int last) {
  const int s = static_cast<int>(fan.size());
  for (int j = 1; j <= s; ++j) colors[fan[j - 1]] = (s - j) % 2 == 0 ? last : 1 - last;
}

// Colors g_s and g_{s-1} with 1-c and alternates backwards from g_{s-2} = c.
void double_tail_fill(std::vector<int>& colors, const std::vector<int>& fan, int c) {
  const int s = static_cast<int>(fan.size());
  colors[fan[s - 1]] = 1 - c;
  colors[fan[s - 2]] = 1 - c;
  for (int j = 1; j <= s - 2; ++j) colors[fan[j - 1]] = (s - 2 - j) % 2 == 0 ? c : 1 - c;
}

OuterpathRun trivial_run(const Graph& g, std::vector<int> colors) {
  Coloring coloring{std::move(colors), 2};
  if (g.vertex_count > 0 && !validate(g, coloring, 2, 2).valid)
    throw std::logic_error("trivial coloring is invalid");
  return {g, {}, std::move(coloring), {}};
}

}  // namespace

OuterpathRun color_outerpath_traced(const Graph& g) {
  if (g.vertex_count == 0) return {g, {}, Coloring{{}, 2}, {}};
  if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
  if (g.vertex_count <= 2) return trivial_run(g, std::vector<int>(g.vertex_count, 0));
  if (g.edge_count() == g.vertex_count - 1) {
    // Trees: a proper 2-coloring by depth parity works.
    std::vector<int> colors(g.vertex_count, -1), queue{0};
    colors[0] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (int w : g.adj[queue[i]])
        if (colors[w] < 0) {
          colors[w] = 1 - colors[queue[i]];
          queue.push_back(w);
        }
    return trivial_run(g, std::move(colors));
  }

  const Graph base = is_biconnected(g) ? g : biconnect_augment(g).graph;
  auto emb = recognize_outerplanar(base);
  if (!emb) throw std::invalid_argument("graph is not outerplanar");
  WeakDualTree dual = weak_dual(base, *emb);
  if (!dual_is_path(dual)) throw std::invalid_argument("graph is not an outerpath");
  Graph tri = triangulate_core(base, dual);

  OuterpathRun run;
  run.triangulated = tri;
  if (tri.vertex_count <= 4) {
    auto all = enumerate_colorings(tri, 2, 2);
    if (all.empty()) throw std::logic_error("small outerpath has no valid coloring");
    run.coloring = all.front();
  } else {
    run.decomposition = spine_decompose(tri);
    const auto& dec = run.decomposition;
    const int m = static_cast<int>(dec.spine.size()) - 1;
    std::vector<int> colors(tri.vertex_count, -1);
    colors[dec.spine[0]] = 0;
    run.trace.push_back({0, MachineState::Q0});
    MachineState state = MachineState::Q0;
    for (int i = 1; i <= m; ++i) {
      const auto& fan = dec.fans[i - 1];
      const int s = static_cast<int>(fan.size());
      const int c = colors[dec.spine[i - 1]];
      const int next_fan = static_cast<int>(dec.fans[i].size());
      std::optional<MachineState> next;
      auto branch_even = [&] {
        if (next_fan == 0) {
          alternate_fill(colors, fan, c);
          next = std::nullopt;
        } else if (next_fan == 1) {
          alternate_fill(colors, fan, c);
          next = MachineState::Q5;
        } else {
          double_tail_fill(colors, fan, c);
          next = MachineState::Q4;
        }
      };
      switch (state) {
        case MachineState::Q0:
          alternate_fill(colors, fan, 1 - c);
          next = MachineState::Q1;
          break;
        case MachineState::Q1:
          if (s == 1) {
            colors[fan[0]] = c;
            next = MachineState::Q2;
          } else {
            alternate_fill(colors, fan, 1 - c);
            next = MachineState::Q1;
          }
          break;
        case MachineState::Q2:
          if (s % 2 == 1) {
            alternate_fill(colors, fan, 1 - c);
            next = MachineState::Q1;
          } else {
            branch_even();
          }
          break;
        case MachineState::Q3:
          if (s == 1) {
            colors[fan[0]] = c;
            next = MachineState::Q2;
          } else if (s % 2 == 0) {
            alternate_fill(colors, fan, 1 - c);
            next = MachineState::Q1;
          } else {
            branch_even();
          }
          break;
        case MachineState::Q4:
          if (s < 2) throw std::logic_error("double-tail state needs a fan of size two");
          alternate_fill(colors, fan, 1 - c);
          next = MachineState::Q1;
          break;
        case MachineState::Q5:
          if (s != 1) throw std::logic_error("pair state needs a fan of size one");
          colors[fan[0]] = 1 - c;
          next = MachineState::Q3;
          break;
      }
      run.trace.push_back({i, next});
      if (next) {
        if (!state_predicate(tri, dec, colors, i + 1, *next))
          throw std::logic_error("machine invariant failed after a fill");
        state = *next;
      } else if (i != m) {
        throw std::logic_error("machine finished before the last fan");
      }
    }
    if (run.trace.back().claimed) run.trace.push_back({m, std::nullopt});
    for (int v = 0; v < tri.vertex_count; ++v)
      if (colors[v] < 0) throw std::logic_error("machine left a vertex uncolored");
    run.coloring = Coloring{std::move(colors), 2};
  }
  if (!validate(tri, run.coloring, 2, 2).valid)
    throw std::logic_error("machine produced an invalid coloring");
  return run;
}

Coloring color_outerpath(const Graph& g) {
  OuterpathRun run = color_outerpath_traced(g);
  std::vector<int> colors(run.coloring.colors.begin(),
                          run.coloring.colors.begin() + g.vertex_count);
  Coloring out{std::move(colors), 2};
  if (g.vertex_count > 0 && !validate(g, out, 2, 2).valid)
    throw std::logic_error("restricted coloring is invalid");
  return out;
}

}  // namespace starcol
