#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "oracles.hpp"
#include "starcol/exact_solver.hpp"
#include "starcol/graph.hpp"
#include "starcol/instances.hpp"
#include "starcol/rng.hpp"

using namespace starcol;

namespace {

Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) e.push_back({a, b});
  return build_graph(n, e);
}

int mono_degree(const Graph& g, const std::vector<int>& colors, int v) {
  int d = 0;
  for (int w : g.adj[v])
    if (colors[w] == colors[v]) ++d;
  return d;
}

}  // namespace

TEST_CASE("decide on complete graphs") {
  const Graph k6 = complete(6);
  const SolveResult yes = decide(k6, 3, 2);
  REQUIRE(yes.status == SolveStatus::Colorable);
  REQUIRE(yes.coloring.has_value());
  CHECK(validate(k6, *yes.coloring, 3, 2).valid);

  const SolveResult no = decide(k6, 2, 2);
  CHECK(no.status == SolveStatus::Uncolorable);
  CHECK_FALSE(no.coloring.has_value());
}

TEST_CASE("decide on the 17-vertex hard instance") {
  const Graph g = hard_outerplanar_17();
  CHECK(decide(g, 2, 2).status == SolveStatus::Uncolorable);
  const SolveResult r = decide(g, 3, 2);
  REQUIRE(r.status == SolveStatus::Colorable);
  CHECK(validate(g, *r.coloring, 3, 2).valid);
}

TEST_CASE("decide is deterministic") {
  const Graph g = hard_outerplanar_17();
  const SolveResult a = decide(g, 3, 2);
  const SolveResult b = decide(g, 3, 2);
  CHECK(a.status == b.status);
  CHECK(a.nodes_explored == b.nodes_explored);
  REQUIRE(a.coloring.has_value());
  REQUIRE(b.coloring.has_value());
  CHECK(a.coloring->colors == b.coloring->colors);
}

TEST_CASE("decide pins the first vertex of each component to color 0") {
  det_rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.next_int(2, 8);
    const Graph g = oracles::random_graph(n, 30, rng);
    const SolveResult r = decide(g, 3, 2);
    if (r.status != SolveStatus::Colorable) continue;
    // Recompute the documented vertex order: descending degree, ties by index.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    // Component labels.
    std::vector<int> comp(n, -1);
    int comp_count = 0;
    for (int v = 0; v < n; ++v) {
      if (comp[v] >= 0) continue;
      std::vector<int> queue{v};
      comp[v] = comp_count;
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (int w : g.adj[queue[i]])
          if (comp[w] < 0) {
            comp[w] = comp_count;
            queue.push_back(w);
          }
      ++comp_count;
    }
    for (int c = 0; c < comp_count; ++c) {
      int first = -1;
      for (int v = 0; v < n; ++v)
        if (comp[v] == c && (first < 0 || pos[v] < pos[first])) first = v;
      CHECK(r.coloring->colors[first] == 0);
    }
  }
}

TEST_CASE("decide matches full enumeration on small graphs") {
  det_rng rng(41);
  int graphs = 0;
  while (graphs < 200) {
    const int n = rng.next_int(1, 7);
    const Graph g = oracles::random_graph(n, rng.next_int(20, 80), rng);
    ++graphs;
    for (int kappa = 2; kappa <= 3; ++kappa)
      for (int lambda = 0; lambda <= 2; ++lambda) {
        const SolveResult r = decide(g, kappa, lambda);
        REQUIRE(r.status != SolveStatus::Unknown);
        CHECK((r.status == SolveStatus::Colorable) == oracles::colorable(g, kappa, lambda));
        if (r.status == SolveStatus::Colorable) {
          REQUIRE(r.coloring.has_value());
          CHECK(validate(g, *r.coloring, kappa, lambda).valid);
          CHECK(oracles::valid_coloring(g, *r.coloring, kappa, lambda));
        }
      }
  }
}

TEST_CASE("colorability is monotone in kappa and lambda") {
  det_rng rng(43);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = rng.next_int(2, 7);
    const Graph g = oracles::random_graph(n, 50, rng);
    for (int kappa = 1; kappa <= 2; ++kappa) {
      if (decide(g, kappa, 2).status == SolveStatus::Colorable)
        CHECK(decide(g, kappa + 1, 2).status == SolveStatus::Colorable);
    }
    for (int lambda = 0; lambda <= 1; ++lambda) {
      if (decide(g, 2, lambda).status == SolveStatus::Colorable)
        CHECK(decide(g, 2, lambda + 1).status == SolveStatus::Colorable);
    }
  }
}

TEST_CASE("budget exhaustion reports unknown, never a wrong answer") {
  const Graph g = hard_outerplanar_17();
  const SolveResult r = decide(g, 2, 2, SolveBudget{10, 0.0});
  CHECK(r.status == SolveStatus::Unknown);
  CHECK_FALSE(r.coloring.has_value());
  CHECK(r.nodes_explored <= 10);

  const SolveResult t = decide(g, 2, 2, SolveBudget{10'000'000, 1e-9});
  CHECK(t.status == SolveStatus::Unknown);
}

TEST_CASE("enumerate_colorings on the canonical small graphs") {
  const Graph one = build_graph(1, {});
  CHECK(enumerate_colorings(one, 2, 2).size() == 2);

  const Graph edge = build_graph(2, {{0, 1}});
  const auto proper = enumerate_colorings(edge, 2, 0);
  REQUIRE(proper.size() == 2);
  CHECK(proper[0].colors == std::vector<int>{0, 1});  // lexicographic order
  CHECK(proper[1].colors == std::vector<int>{1, 0});

  const Graph k6 = complete(6);
  const auto all = enumerate_colorings(k6, 3, 2);
  CHECK(all.size() == 90);  // 6!/(2!2!2!) pairings into three color classes
  for (const Coloring& c : all) {
    CHECK(validate(k6, c, 3, 2).valid);
    for (int v = 0; v < 6; ++v) CHECK(mono_degree(k6, c.colors, v) == 1);
  }
  // Lexicographic order, vertex 0 most significant.
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].colors < all[i].colors);
}

TEST_CASE("enumerate_colorings matches the naive oracle") {
  det_rng rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.next_int(1, 6);
    const Graph g = oracles::random_graph(n, 50, rng);
    const int kappa = rng.next_int(1, 3);
    const int lambda = rng.next_int(0, 2);
    const auto mine = enumerate_colorings(g, kappa, lambda);
    std::size_t expected = 0;
    for (const auto& colors : oracles::all_colorings(n, kappa))
      if (oracles::valid_coloring(g, colors, kappa, lambda)) ++expected;
    CHECK(mine.size() == expected);
    for (const Coloring& c : mine) CHECK(oracles::valid_coloring(g, c, kappa, lambda));
  }
}

TEST_CASE("enumerate_colorings rejects oversized searches") {
  const Graph big = build_graph(24, {});
  CHECK_THROWS_AS(enumerate_colorings(big, 2, 2), std::invalid_argument);
  const Graph big3 = build_graph(15, {});
  CHECK_THROWS_AS(enumerate_colorings(big3, 3, 2), std::invalid_argument);
}
