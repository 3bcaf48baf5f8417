#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "starcol/coloring.hpp"
#include "starcol/graph.hpp"

namespace starcol {

struct SolveBudget {
  std::uint64_t node_limit = 10'000'000;
  double time_limit_seconds = 0.0;  // 0 means no time limit
};

enum class SolveStatus { Colorable, Uncolorable, Unknown };

struct SolveResult {
  SolveStatus status = SolveStatus::Unknown;
  std::optional<Coloring> coloring;  // certificate when Colorable
  std::uint64_t nodes_explored = 0;
};

// Exhaustive backtracking decision procedure for (kappa, lambda)-colorings:
// kappa colors, every monochromatic component acyclic with diameter at most
// lambda (0, 1 or 2). Deterministic: vertices are tried by descending degree
// (ties by index), colors in ascending order, and the first vertex of each
// connected component is pinned to color 0. Every color assignment attempt
// counts one node against the budget; Unknown is returned on exhaustion.
SolveResult decide(const Graph& g, int kappa, int lambda, const SolveBudget& budget = {});

// All valid colorings in lexicographic order (vertex 0 most significant).
// Throws std::invalid_argument when kappa^n exceeds 10^7.
std::vector<Coloring> enumerate_colorings(const Graph& g, int kappa, int lambda);

}  // namespace starcol
