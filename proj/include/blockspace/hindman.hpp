#pragma once

#include <optional>

#include "blockspace/coloring.hpp"

namespace blockspace {

/// A block sequence (as masks, strictly support-increasing) whose whole
/// nonzero span carries one color.
struct HindmanWitness {
  std::vector<std::uint32_t> blocks;
  std::uint8_t color = 0;
};

/// The canonically least length-k witness under `coloring`, or nullopt
/// after a complete (pruned) search. Deterministic for any worker count:
/// workers partition the first block and the least successful branch wins.
std::optional<HindmanWitness> hindman_search(const Coloring& coloring, unsigned k,
                                             unsigned jobs = 1);

/// Does at least one 2-coloring of window N avoid every length-k witness?
/// Complete backtracking over colorings with complement symmetry (the
/// first vector's color is pinned) and not-all-equal propagation.
bool avoiding_coloring_exists(unsigned window, unsigned k, unsigned jobs = 1);

struct WindowScan {
  struct Entry {
    unsigned window;
    bool forced;  // every coloring admits a witness
  };
  std::vector<Entry> entries;
  std::optional<unsigned> found;  // least forced window, if any <= cap
  unsigned cap = 0;
};

/// Least N <= cap such that every 2-coloring of window N admits a length-k
/// monochromatic-span witness.
WindowScan min_hindman_window(unsigned k, unsigned cap, unsigned jobs = 1);

/// The least window at which every 2-coloring admits a monochromatic-span
/// block pair (k = 2). Frozen from min_hindman_window(2, 6); the regression
/// suite recomputes it. This is the scale of the pigeonhole (A4) checks.
inline constexpr unsigned kPairPigeonholeWindow = 5;

}  // namespace blockspace
