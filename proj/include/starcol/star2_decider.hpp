#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "starcol/coloring.hpp"
#include "starcol/embedding.hpp"
#include "starcol/graph.hpp"

namespace starcol {

// Behavior class of a two-colored subgraph relative to an oriented attachment
// edge (u, v): the colors of u and v plus their roles. Two colorings in the
// same class extend identically across the attachment edge.
struct EquivalenceClass {
  int color_u = 0;
  Role role_u = Role::Isolated;
  int color_v = 0;
  Role role_v = Role::Isolated;
  auto operator<=>(const EquivalenceClass&) const = default;
};

// Swaps the two endpoints (reverses the attachment-edge orientation).
EquivalenceClass flip_class(const EquivalenceClass& c);

// All classes realizable by some valid 2-coloring of some graph containing
// the attachment edge, in sorted order.
std::vector<EquivalenceClass> enumerate_classes();

// One walk edge of a face: either a plain boundary edge or the attachment
// edge of a child subtree, carrying that subtree's achievable classes
// (oriented along the walk direction).
using ChildClasses = std::optional<std::vector<EquivalenceClass>>;

// Colors chosen for the walk vertices plus, per walk edge, the child class
// the witness uses (empty for plain edges).
struct WalkWitness {
  std::vector<int> colors;
  std::vector<std::optional<EquivalenceClass>> child_class;
};

// Whether the face given by `walk` (boundary path from u to v that avoids the
// closing edge (u, v)), glued to child subtrees across the annotated walk
// edges, admits a valid 2-coloring in class `target`.
bool class_achievable(const std::vector<int>& walk, const std::vector<ChildClasses>& children,
                      const EquivalenceClass& target, WalkWitness* witness = nullptr);

// All achievable classes for the face, computed one candidate class at a time.
std::vector<EquivalenceClass> achievable_classes(const std::vector<int>& walk,
                                                 const std::vector<ChildClasses>& children);

// Decides whether g (any graph, possibly disconnected) admits a 2-coloring
// whose monochromatic components are stars, and returns one if so.
// Throws std::invalid_argument if g is not outerplanar.
std::optional<Coloring> decide_outerplanar_2star(const Graph& g);

}  // namespace starcol
