#pragma once

#include <optional>
#include <vector>

#include "starcol/coloring.hpp"
#include "starcol/graph.hpp"

namespace starcol {

// Spine-and-fan decomposition of a maximal (inner-triangulated) outerpath on
// at least five vertices. The spine lists vertices v_1..v_{m+1} with
// consecutive pairs adjacent; fan f_i hangs off v_i, ends with v_{i+1} for
// i <= m, and f_{m+1} is empty. Every vertex appears exactly once in
// {v_1} + f_1 + ... + f_m, and v_1..v_m are exactly the vertices of degree
// at least four.
struct SpineDecomposition {
  std::vector<int> spine;
  std::vector<std::vector<int>> fans;
};

// Throws std::invalid_argument unless g is a biconnected inner-triangulated
// outerpath with at least five vertices.
SpineDecomposition spine_decompose(const Graph& g);

// Adds chords to a biconnected outerpath so every inner face becomes a
// triangle while the weak dual stays a path.
Graph triangulate_outerpath(const Graph& g);

// Invariants the fan-filling machine maintains while sweeping the spine.
enum class MachineState { Q0, Q1, Q2, Q3, Q4, Q5 };

// One machine step: after filling fan f_step, the partial coloring satisfies
// the claimed invariant at spine position step + 1. A final entry with no
// claim records that the coloring is complete.
struct TraceStep {
  int step = 0;
  std::optional<MachineState> claimed;
};

// Whether the invariant of `state` holds for a partial coloring (uncolored
// vertices marked -1) at 1-based spine position `index`.
bool state_predicate(const Graph& g, const SpineDecomposition& dec,
                     const std::vector<int>& partial, int index, MachineState state);

// Full record of a run: the triangulated graph the machine worked on (with
// any biconnectivity padding appended after the original vertices), its
// decomposition, the coloring of the triangulated graph, and the state trace.
// Decomposition and trace are empty when the graph is small enough to color
// directly.
struct OuterpathRun {
  Graph triangulated;
  SpineDecomposition decomposition;
  Coloring coloring;
  std::vector<TraceStep> trace;
};

// Colors a connected outerpath (or tree, or small graph) with two colors so
// every monochromatic component is a star. Throws std::invalid_argument if g
// is disconnected or not an outerpath.
OuterpathRun color_outerpath_traced(const Graph& g);

// The coloring restricted to the original vertices of g.
Coloring color_outerpath(const Graph& g);

}  // namespace starcol
