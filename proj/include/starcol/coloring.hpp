#pragma once

#include <vector>

#include "starcol/graph.hpp"

namespace starcol {

struct Coloring {
  std::vector<int> colors;  // one entry per vertex
  int color_count = 0;      // colors are 0..color_count-1
};

enum class ViolationKind {
  MonochromaticCycle,   // witness is a monochromatic cycle (>= 3 vertices)
  PathTooLong,          // witness is a monochromatic path on lambda+2 vertices
  ColorOutOfRange,      // witness is the offending vertex
};

struct Verdict {
  bool valid = true;
  ViolationKind kind = ViolationKind::MonochromaticCycle;
  std::vector<int> witness;
};

// Checks that every monochromatic component is acyclic with diameter at most
// lambda. lambda must be 0, 1 or 2 and the coloring total, otherwise
// std::invalid_argument is thrown.
Verdict validate(const Graph& g, const Coloring& c, int kappa, int lambda);

struct MonoComponent {
  int color = 0;
  std::vector<int> vertices;                // sorted
  std::vector<std::pair<int, int>> edges;   // induced same-color edges
};

// Monochromatic components ordered by smallest vertex.
std::vector<MonoComponent> monochromatic_components(const Graph& g, const Coloring& c);

// Role of a vertex relative to a partner edge (v, partner), in a coloring
// whose monochromatic components are stars:
//  - Isolated: v has no same-colored neighbor.
//  - Undefined: v and partner form an isolated same-colored pair.
//  - Center: v can serve as the center of its star (it has two or more
//    same-colored neighbors, or exactly one that is not the partner and has
//    no further same-colored neighbor of its own).
//  - Leaf: v's unique same-colored neighbor is a center with two or more
//    same-colored neighbors.
enum class Role { Isolated, Undefined, Center, Leaf };

// Throws std::invalid_argument if (v, partner) is not an edge or v's
// monochromatic component is not a star.
Role role_of(const Graph& g, const Coloring& c, int v, int partner);

}  // namespace starcol
