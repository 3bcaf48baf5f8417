#pragma once

#include <optional>
#include <string>

#include "starcol/coloring.hpp"
#include "starcol/graph.hpp"

namespace starcol {

// Graphviz text for g. With a coloring, vertices are filled by color and
// monochromatic edges drawn bold.
std::string to_dot(const Graph& g, const std::optional<Coloring>& coloring = std::nullopt);

}  // namespace starcol
