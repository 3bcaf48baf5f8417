#include "starcol/instances.hpp"

#include <stdexcept>
#include <utility>

#include "starcol/rng.hpp"

namespace starcol {

Graph hard_outerplanar_17() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= 8; ++i) edges.push_back({0, i});
  for (int i = 1; i <= 7; ++i) edges.push_back({i, i + 1});
  for (int j = 9; j <= 12; ++j) edges.push_back({2, j});
  for (int j = 9; j <= 11; ++j) edges.push_back({j, j + 1});
  for (int j = 13; j <= 16; ++j) edges.push_back({3, j});
  for (int j = 13; j <= 15; ++j) edges.push_back({j, j + 1});
  return build_graph(17, edges);
}

Graph random_outerplanar(int n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("need at least three vertices");
  det_rng rng(seed);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  rng.shuffle(order);

  // Random triangulation of the polygon over circle positions, splitting each
  // range at a random apex.
  std::vector<std::pair<int, int>> chords;
  std::vector<std::pair<int, int>> ranges{{0, n - 1}};
  while (!ranges.empty()) {
    auto [i, j] = ranges.back();
    ranges.pop_back();
    if (j - i < 2) continue;
    int k = rng.next_int(i + 1, j - 1);
    if (k > i + 1) chords.push_back({i, k});
    if (j > k + 1) chords.push_back({k, j});
    ranges.push_back({i, k});
    ranges.push_back({k, j});
  }

  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : chords)
    if (rng.next_bool()) edges.push_back({order[a], order[b]});
  std::vector<std::pair<int, int>> boundary;
  for (int i = 0; i < n; ++i) boundary.push_back({order[i], order[(i + 1) % n]});
  std::vector<std::pair<int, int>> current = edges;
  current.insert(current.end(), boundary.begin(), boundary.end());
  for (auto e : boundary) {
    if (!rng.next_chance(1, 8)) continue;
    std::vector<std::pair<int, int>> trial;
    for (auto f : current)
      if (f != e) trial.push_back(f);
    if (is_connected(build_graph(n, trial))) current = std::move(trial);
  }
  return build_graph(n, current);
}

namespace {

// Builds the chord list of a triangulation strip: starting from the full
// polygon edge (0, n-1), each step chews off a triangle at the low or high
// end according to one choice bit.
std::vector<std::pair<int, int>> strip_chords(int n, auto&& next_bit) {
  std::vector<std::pair<int, int>> chords;
  int lo = 0, hi = n - 1;
  while (hi - lo > 2) {
    if (next_bit()) {
      ++lo;
      chords.push_back({lo, hi});
    } else {
      --hi;
      chords.push_back({lo, hi});
    }
  }
  return chords;
}

}  // namespace

Graph random_outerpath(int n, std::uint64_t seed, bool maximal) {
  if (n < 3) throw std::invalid_argument("need at least three vertices");
  det_rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  for (auto c : strip_chords(n, [&] { return rng.next_bool(); }))
    if (maximal || rng.next_bool()) edges.push_back(c);
  return build_graph(n, edges);
}

std::vector<Graph> all_maximal_outerpaths(int n) {
  if (n < 3) throw std::invalid_argument("need at least three vertices");
  std::vector<Graph> out;
  const int steps = n - 3;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << steps); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    int step = 0;
    for (auto c : strip_chords(n, [&] { return (mask >> step++) & 1; })) edges.push_back(c);
    out.push_back(build_graph(n, edges));
  }
  return out;
}

}  // namespace starcol
