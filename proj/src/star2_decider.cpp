#include "starcol/star2_decider.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace starcol {
namespace {

// Status of a single tracked vertex inside a partial coloring of a face walk.
//   Iso:  no monochromatic edges yet; may still become anything.
//   Ctr:  has >= 1 monochromatic edge and every monochromatic neighbor is a
//         degree-1 leaf, so it can still gain further leaves.
//   Leaf: saturated; any further monochromatic edge would create a second
//         center or a long path inside its star.
enum class VStat { Iso, Ctr, Leaf };

// Joint kinds, used when the walk start u and the current frontier vertex lie
// in the same monochromatic component.
constexpr int kPair = 0;          // component is exactly {u, frontier}
constexpr int kStarU = 1;         // star centered at u, frontier is a leaf
constexpr int kStarFrontier = 2;  // star centered at the frontier, u is a leaf
constexpr int kSharedCenter = 3;  // u and frontier are leaves of a common center

struct DpState {
  bool joint = false;
  int joint_kind = -1;
  VStat u_stat = VStat::Iso;    // meaningful only when !joint
  VStat cur_stat = VStat::Iso;  // meaningful only when !joint
  int cur_color = 0;
  auto operator<=>(const DpState&) const = default;
};

DpState make_sep(VStat u, VStat cur, int color) { return {false, -1, u, cur, color}; }
DpState make_joint(int kind, int color) { return {true, kind, VStat::Iso, VStat::Iso, color}; }

// Status of u once the frontier moves on and the joint component is frozen.
VStat close_joint(int kind) {
  return (kind == kPair || kind == kStarU) ? VStat::Ctr : VStat::Leaf;
}

VStat stat_of(Role r) {
  if (r == Role::Isolated) return VStat::Iso;
  if (r == Role::Center) return VStat::Ctr;
  return VStat::Leaf;
}

// Crossing a plain walk edge, or gluing a pair component (the same-color
// (Undefined, Undefined) class behaves exactly like a monochromatic edge).
std::optional<DpState> step_plain(const DpState& s, int next_color) {
  if (next_color != s.cur_color) {
    VStat u = s.joint ? close_joint(s.joint_kind) : s.u_stat;
    return make_sep(u, VStat::Iso, next_color);
  }
  if (!s.joint) {
    if (s.cur_stat == VStat::Iso) return make_sep(s.u_stat, VStat::Ctr, next_color);
    if (s.cur_stat == VStat::Ctr) return make_sep(s.u_stat, VStat::Leaf, next_color);
    return std::nullopt;
  }
  if (s.joint_kind == kPair || s.joint_kind == kStarFrontier)
    return make_joint(kSharedCenter, next_color);
  return std::nullopt;
}

// Crossing a walk edge that carries a child subtree realizing class d
// (oriented along the walk). d.color_u must match the frontier color.
std::optional<DpState> step_child(const DpState& s, const EquivalenceClass& d) {
  if (d.color_u != s.cur_color) return std::nullopt;
  if (d.color_u == d.color_v) {
    if (d.role_u == Role::Undefined) return step_plain(s, d.color_v);
    if (d.role_u == Role::Center) {
      // (Center, Leaf): the frontier absorbs a center bundle whose mates are
      // all leaves; the next vertex arrives saturated.
      if (!s.joint) {
        if (s.cur_stat == VStat::Leaf) return std::nullopt;
        return make_sep(s.u_stat, VStat::Leaf, d.color_v);
      }
      if (s.joint_kind == kPair || s.joint_kind == kStarFrontier)
        return make_joint(kSharedCenter, d.color_v);
      return std::nullopt;
    }
    // (Leaf, Center): the frontier hangs as a strict leaf off the child side,
    // so it must have had no monochromatic edge; the next vertex can still
    // gain leaves.
    if (!s.joint && s.cur_stat == VStat::Iso)
      return make_sep(s.u_stat, VStat::Ctr, d.color_v);
    return std::nullopt;
  }
  // Different endpoint colors: fold d.role_u into the frontier, then advance.
  DpState m = s;
  if (d.role_u == Role::Center) {
    if (!m.joint) {
      if (m.cur_stat == VStat::Leaf) return std::nullopt;
      m.cur_stat = VStat::Ctr;
    } else if (m.joint_kind == kPair || m.joint_kind == kStarFrontier) {
      m.joint_kind = kStarFrontier;
    } else {
      return std::nullopt;
    }
  } else if (d.role_u == Role::Leaf) {
    if (m.joint || m.cur_stat != VStat::Iso) return std::nullopt;
    m.cur_stat = VStat::Leaf;
  }
  VStat u = m.joint ? close_joint(m.joint_kind) : m.u_stat;
  return make_sep(u, stat_of(d.role_v), d.color_v);
}

// First walk edge: the frontier leaves u itself.
std::optional<DpState> start_plain(int cu, int next_color) {
  if (next_color == cu) return make_joint(kPair, next_color);
  return make_sep(VStat::Iso, VStat::Iso, next_color);
}

std::optional<DpState> start_child(int cu, const EquivalenceClass& d) {
  if (d.color_u != cu) return std::nullopt;
  if (d.color_u == d.color_v) {
    if (d.role_u == Role::Undefined) return make_joint(kPair, d.color_v);
    if (d.role_u == Role::Center) return make_joint(kStarU, d.color_v);
    return make_joint(kStarFrontier, d.color_v);
  }
  return make_sep(stat_of(d.role_u), stat_of(d.role_v), d.color_v);
}

// Roles of u and v once the closing edge (u, v) is added. Returns nothing if
// the edge would break the star condition.
std::optional<std::pair<Role, Role>> closing_roles(const DpState& s, bool same_color) {
  if (s.joint) return std::nullopt;
  if (same_color) {
    if (s.u_stat == VStat::Iso && s.cur_stat == VStat::Iso)
      return std::pair{Role::Undefined, Role::Undefined};
    if (s.u_stat == VStat::Iso && s.cur_stat == VStat::Ctr)
      return std::pair{Role::Leaf, Role::Center};
    if (s.u_stat == VStat::Ctr && s.cur_stat == VStat::Iso)
      return std::pair{Role::Center, Role::Leaf};
    return std::nullopt;
  }
  auto role = [](VStat v) {
    if (v == VStat::Iso) return Role::Isolated;
    if (v == VStat::Ctr) return Role::Center;
    return Role::Leaf;
  };
  return std::pair{role(s.u_stat), role(s.cur_stat)};
}

struct Back {
  DpState prev;
  int color = -1;
  std::optional<EquivalenceClass> child;
};

}  // namespace

EquivalenceClass flip_class(const EquivalenceClass& c) {
  return {c.color_v, c.role_v, c.color_u, c.role_u};
}

std::vector<EquivalenceClass> enumerate_classes() {
  std::vector<EquivalenceClass> out;
  const Role roles[] = {Role::Isolated, Role::Undefined, Role::Center, Role::Leaf};
  for (int cu = 0; cu < 2; ++cu)
    for (Role ru : roles)
      for (int cv = 0; cv < 2; ++cv)
        for (Role rv : roles) {
          bool ok;
          if (ru == Role::Undefined || rv == Role::Undefined) {
            ok = ru == Role::Undefined && rv == Role::Undefined && cu == cv;
          } else if (cu == cv) {
            ok = (ru == Role::Center && rv == Role::Leaf) ||
                 (ru == Role::Leaf && rv == Role::Center);
          } else {
            ok = ru != Role::Undefined && rv != Role::Undefined;
          }
          if (ok) out.push_back({cu, ru, cv, rv});
        }
  std::sort(out.begin(), out.end());
  return out;
}

bool class_achievable(const std::vector<int>& walk, const std::vector<ChildClasses>& children,
                      const EquivalenceClass& target, WalkWitness* witness) {
  if (walk.size() < 3) throw std::invalid_argument("walk must have at least three vertices");
  const std::size_t p = walk.size() - 1;
  if (children.size() != p)
    throw std::invalid_argument("children must have one entry per walk edge");
  const int cu = target.color_u;

  std::vector<std::map<DpState, Back>> layers(p + 1);
  auto add = [](std::map<DpState, Back>& layer, const std::optional<DpState>& st, Back b) {
    if (st && !layer.count(*st)) layer.emplace(*st, std::move(b));
  };
  if (children[0]) {
    for (const auto& d : *children[0]) add(layers[1], start_child(cu, d), {DpState{}, d.color_v, d});
  } else {
    for (int c = 0; c < 2; ++c) add(layers[1], start_plain(cu, c), {DpState{}, c, std::nullopt});
  }
  for (std::size_t e = 1; e < p; ++e) {
    for (const auto& [s, back] : layers[e]) {
      (void)back;
      if (children[e]) {
        for (const auto& d : *children[e]) add(layers[e + 1], step_child(s, d), {s, d.color_v, d});
      } else {
        for (int c = 0; c < 2; ++c) add(layers[e + 1], step_plain(s, c), {s, c, std::nullopt});
      }
    }
  }

  const bool same = target.color_u == target.color_v;
  for (const auto& [s, back] : layers[p]) {
    (void)back;
    if (s.cur_color != target.color_v) continue;
    auto roles = closing_roles(s, same);
    if (!roles || roles->first != target.role_u || roles->second != target.role_v) continue;
    if (witness) {
      witness->colors.assign(walk.size(), -1);
      witness->child_class.assign(p, std::nullopt);
      witness->colors[0] = cu;
      DpState cur = s;
      for (std::size_t e = p; e >= 1; --e) {
        const Back& bk = layers[e].at(cur);
        witness->colors[e] = bk.color;
        witness->child_class[e - 1] = bk.child;
        cur = bk.prev;
      }
    }
    return true;
  }
  return false;
}

std::vector<EquivalenceClass> achievable_classes(const std::vector<int>& walk,
                                                 const std::vector<ChildClasses>& children) {
  std::vector<EquivalenceClass> out;
  for (const auto& cls : enumerate_classes())
    if (class_achievable(walk, children, cls)) out.push_back(cls);
  return out;
}

namespace {

// Walk of one dual-tree node plus, per walk edge, the child glued across it.
struct NodeInfo {
  std::vector<int> walk;
  std::vector<int> child_node;  // -1 for plain edges
  std::vector<bool> child_flipped;
};

NodeInfo build_node_info(const WeakDualTree& dual, int node) {
  NodeInfo info;
  const auto& face = dual.face[node];
  const auto [u, v] = dual.attachment_edge[node];
  const int s = static_cast<int>(face.size());
  int q = -1;
  for (int i = 0; i < s; ++i)
    if (face[i] == v && face[(i + 1) % s] == u) q = i;
  if (q < 0) throw std::logic_error("attachment edge not on face boundary");
  for (int i = 1; i <= s; ++i) info.walk.push_back(face[(q + i) % s]);

  std::map<std::pair<int, int>, int> edge_child;
  for (int c : dual.children[node]) {
    auto [a, b] = dual.attachment_edge[c];
    edge_child[std::minmax(a, b)] = c;
  }
  const std::size_t p = info.walk.size() - 1;
  info.child_node.assign(p, -1);
  info.child_flipped.assign(p, false);
  std::size_t used = 0;
  for (std::size_t j = 0; j < p; ++j) {
    auto it = edge_child.find(std::minmax(info.walk[j], info.walk[j + 1]));
    if (it == edge_child.end()) continue;
    info.child_node[j] = it->second;
    info.child_flipped[j] =
        dual.attachment_edge[it->second] != std::pair{info.walk[j], info.walk[j + 1]};
    ++used;
  }
  if (used != dual.children[node].size())
    throw std::logic_error("child attachment edge missing from parent walk");
  return info;
}

// Colors one connected component with at least three vertices, or reports
// that it has no valid 2-coloring. Throws if the component is not outerplanar.
std::optional<std::vector<int>> color_component(const Graph& comp) {
  if (!recognize_outerplanar(comp)) throw std::invalid_argument("graph is not outerplanar");
  Augmentation aug = biconnect_augment(comp);
  auto emb = recognize_outerplanar(aug.graph);
  if (!emb) throw std::logic_error("augmented graph lost outerplanarity");
  WeakDualTree dual = weak_dual(aug.graph, *emb);

  const int t = static_cast<int>(dual.face.size());
  std::vector<int> order;  // breadth-first from the root
  order.push_back(dual.root);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int c : dual.children[order[i]]) order.push_back(c);
  if (static_cast<int>(order.size()) != t) throw std::logic_error("dual tree is not connected");

  std::vector<NodeInfo> info(t);
  std::vector<std::map<EquivalenceClass, WalkWitness>> achieved(t);
  for (int i = t - 1; i >= 0; --i) {
    const int node = order[i];
    info[node] = build_node_info(dual, node);
    const std::size_t p = info[node].walk.size() - 1;
    std::vector<ChildClasses> children(p);
    for (std::size_t j = 0; j < p; ++j) {
      const int c = info[node].child_node[j];
      if (c < 0) continue;
      std::vector<EquivalenceClass> set;
      for (const auto& [cls, wit] : achieved[c]) {
        (void)wit;
        set.push_back(info[node].child_flipped[j] ? flip_class(cls) : cls);
      }
      std::sort(set.begin(), set.end());
      children[j] = std::move(set);
    }
    for (const auto& cls : enumerate_classes()) {
      WalkWitness wit;
      if (class_achievable(info[node].walk, children, cls, &wit))
        achieved[node].emplace(cls, std::move(wit));
    }
  }
  if (achieved[dual.root].empty()) return std::nullopt;

  std::vector<int> colors(aug.graph.vertex_count, -1);
  std::vector<std::pair<int, EquivalenceClass>> stack;
  stack.push_back({dual.root, achieved[dual.root].begin()->first});
  while (!stack.empty()) {
    auto [node, cls] = stack.back();
    stack.pop_back();
    const WalkWitness& wit = achieved[node].at(cls);
    const auto& ni = info[node];
    for (std::size_t i = 0; i < ni.walk.size(); ++i) {
      int v = ni.walk[i];
      if (colors[v] >= 0 && colors[v] != wit.colors[i])
        throw std::logic_error("witness colors disagree on a shared vertex");
      colors[v] = wit.colors[i];
    }
    for (std::size_t j = 0; j + 1 < ni.walk.size(); ++j) {
      if (ni.child_node[j] < 0) continue;
      if (!wit.child_class[j]) throw std::logic_error("witness lacks a child class");
      EquivalenceClass d = *wit.child_class[j];
      if (ni.child_flipped[j]) d = flip_class(d);
      stack.push_back({ni.child_node[j], d});
    }
  }
  colors.resize(comp.vertex_count);
  for (int c : colors)
    if (c < 0) throw std::logic_error("reconstruction left a vertex uncolored");
  return colors;
}

}  // namespace

std::optional<Coloring> decide_outerplanar_2star(const Graph& g) {
  std::vector<int> colors(g.vertex_count, 0);
  for (const auto& comp : connected_components(g)) {
    if (comp.size() <= 2) continue;  // a lone vertex or edge is already a star
    InducedSubgraph sub = induced_subgraph(g, comp);
    auto sub_colors = color_component(sub.graph);
    if (!sub_colors) return std::nullopt;
    for (std::size_t i = 0; i < comp.size(); ++i) colors[sub.to_original[i]] = (*sub_colors)[i];
  }
  Coloring result{colors, 2};
  if (g.vertex_count > 0 && !validate(g, result, 2, 2).valid)
    throw std::logic_error("decider produced an invalid coloring");
  return result;
}

}  // namespace starcol
