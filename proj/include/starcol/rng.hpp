#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace starcol {

// Deterministic random helpers. std::mt19937_64 has a fully specified output
// sequence, but std::uniform_int_distribution and std::shuffle do not, so the
// sampling on top of the engine is done by hand to keep generated instances
// identical across platforms and standard libraries.
class det_rng {
 public:
  explicit det_rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform value in [0, bound), bound >= 1, via rejection sampling.
  std::uint64_t next_below(std::uint64_t bound) {
    std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  int next_int(int lo, int hi) {  // inclusive range
    return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool next_bool() { return (engine_() & 1u) != 0; }

  // True with probability num/den.
  bool next_chance(std::uint64_t num, std::uint64_t den) { return next_below(den) < num; }

  template <typename T>
  void shuffle(std::vector<T>& v) {  // Fisher-Yates
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace starcol
