#pragma once

#include <cstdint>

#include "blockspace/stream.hpp"

namespace blockspace {

/// Small deterministic RNG (splitmix64); identical across platforms, so
/// randomized suites reproduce bit-exactly from their seeds.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
  bool chance(unsigned num, unsigned den) { return below(den) < num; }
};

/// Nonzero vector with support inside [lo, hi].
Vec random_vector_in(SplitMix64& rng, const Field& field, std::uint32_t lo,
                     std::uint32_t hi);

/// Block sequence within [0, window), at most max_blocks blocks.
BlockSeq random_block_seq(SplitMix64& rng, const Field& field,
                          std::uint32_t window, std::size_t max_blocks);

/// Blockwise reduction of B: consecutive blocks grouped, one nonzero
/// combination per group. Result <= B with at most max_blocks blocks.
BlockSeq random_reduction(SplitMix64& rng, const BlockSeq& b,
                          std::size_t max_blocks);

IndexSet random_index_set(SplitMix64& rng);

/// Random stream from the constructor algebra (bounded nesting).
BlockStream random_stream(SplitMix64& rng, const Field& field, unsigned depth);

/// Interval sequence with I_0 = {0} and inter-interval gaps >= 3 (the
/// separation under which the sparse-subsequence prefix laws hold at every
/// index).
IntervalSeq random_separated_intervals(SplitMix64& rng);

}  // namespace blockspace
