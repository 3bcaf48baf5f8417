#include "starcol/dot.hpp"

#include <sstream>
#include <stdexcept>

namespace starcol {

std::string to_dot(const Graph& g, const std::optional<Coloring>& coloring) {
  static const char* palette[] = {"white",     "gray75", "lightblue", "palegreen",
                                  "lightpink", "khaki",  "orange",    "plum"};
  constexpr int palette_size = 8;
  if (coloring && static_cast<int>(coloring->colors.size()) != g.vertex_count)
    throw std::invalid_argument("coloring size must match the vertex count");
  std::ostringstream out;
  out << "graph {\n  node [shape=circle, style=filled, fillcolor=white];\n";
  for (int v = 0; v < g.vertex_count; ++v) {
    out << "  " << v;
    if (coloring) out << " [fillcolor=\"" << palette[coloring->colors[v] % palette_size] << "\"]";
    out << ";\n";
  }
  for (auto [a, b] : g.edges) {
    out << "  " << a << " -- " << b;
    if (coloring && coloring->colors[a] == coloring->colors[b]) out << " [style=bold]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace starcol
