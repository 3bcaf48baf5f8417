#pragma once

#include <cstdint>
#include <vector>

#include "starcol/graph.hpp"

namespace starcol {

// The 17-vertex outerplanar graph with maximum degree 8 that admits no
// 2-coloring with star monochromatic components: a hub (vertex 0) joined to a
// path u1..u8 (vertices 1..8), with two of the path vertices carrying fans of
// their own (u2 gets 9..12, u3 gets 13..16).
Graph hard_outerplanar_17();

// Connected random outerplanar graph on n >= 3 vertices: a random cycle,
// randomly triangulated, keeping each chord with probability 1/2 and dropping
// each boundary edge with probability 1/8 when connectivity survives.
Graph random_outerplanar(int n, std::uint64_t seed);

// Random outerpath on n >= 3 vertices. When maximal is true the result is
// inner-triangulated; otherwise each chord is kept with probability 1/2.
Graph random_outerpath(int n, std::uint64_t seed, bool maximal);

// Every maximal outerpath on n >= 3 labeled vertices whose outer cycle is
// 0,1,..,n-1 (one graph per triangulation strip), 2^(n-3) graphs for n >= 4.
std::vector<Graph> all_maximal_outerpaths(int n);

}  // namespace starcol
