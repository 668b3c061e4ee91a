#include "blockspace/generators.hpp"

#include <algorithm>

namespace blockspace {

Vec random_vector_in(SplitMix64& rng, const Field& field, std::uint32_t lo,
                     std::uint32_t hi) {
  std::vector<Vec::Entry> entries;
  for (std::uint32_t i = lo; i <= hi; ++i)
    if (rng.chance(1, 2))
      entries.emplace_back(i, static_cast<std::uint8_t>(1 + rng.below(field.q() - 1)));
  if (entries.empty())
    entries.emplace_back(lo + static_cast<std::uint32_t>(rng.below(hi - lo + 1)),
                         static_cast<std::uint8_t>(1 + rng.below(field.q() - 1)));
  return Vec::make(std::move(entries), field);
}

BlockSeq random_block_seq(SplitMix64& rng, const Field& field,
                          std::uint32_t window, std::size_t max_blocks) {
  std::vector<Vec> blocks;
  std::uint32_t lo = 0;
  while (lo < window && blocks.size() < max_blocks) {
    std::uint32_t len = 1 + static_cast<std::uint32_t>(rng.below(3));
    std::uint32_t hi = std::min(window - 1, lo + len - 1);
    if (rng.chance(4, 5)) blocks.push_back(random_vector_in(rng, field, lo, hi));
    lo = hi + 1;
  }
  return BlockSeq::validate(std::move(blocks), field);
}

BlockSeq random_reduction(SplitMix64& rng, const BlockSeq& b,
                          std::size_t max_blocks) {
  const Field& field = b.field();
  std::vector<Vec> out;
  std::size_t i = 0;
  while (i < b.size() && out.size() < max_blocks) {
    std::size_t group = 1 + rng.below(2);
    group = std::min(group, b.size() - i);
    Vec combo = Vec::zero(field);
    bool nonzero = false;
    for (std::size_t j = 0; j < group; ++j) {
      std::uint8_t c = static_cast<std::uint8_t>(rng.below(field.q()));
      if (j + 1 == group && !nonzero && c == 0) c = 1;
      if (c != 0) {
        combo = combo.add(b[i + j].scaled(c));
        nonzero = true;
      }
    }
    out.push_back(std::move(combo));
    i += group;
    if (rng.chance(1, 4) && i < b.size()) ++i;  // occasionally skip a block
  }
  return BlockSeq::validate(std::move(out), field);
}

IndexSet random_index_set(SplitMix64& rng) {
  switch (rng.below(6)) {
    case 0:
      return IndexSet::all();
    case 1:
      return IndexSet::evens();
    case 2:
      return IndexSet::odds();
    case 3:
      return IndexSet::ap(rng.below(3), 1 + rng.below(3));
    case 4:
      return IndexSet::valuation_class(2, static_cast<unsigned>(rng.below(3)));
    default: {
      std::vector<IndexSet> parts{IndexSet::ap(rng.below(3), 2 + rng.below(2)),
                                  IndexSet::ap(1 + rng.below(4), 3 + rng.below(2))};
      return IndexSet::union_of(parts);
    }
  }
}

BlockStream random_stream(SplitMix64& rng, const Field& field, unsigned depth) {
  if (depth == 0 || rng.chance(1, 3)) {
    if (rng.chance(1, 3)) {
      BlockSeq shape = random_block_seq(rng, field, 4, 2);
      if (shape.empty()) shape = BlockSeq::validate({Vec::basis(0, field)}, field);
      std::uint32_t span = shape.max_support() - shape[0].min_support();
      return BlockStream::pattern(shape,
                                  span + 1 + static_cast<std::uint32_t>(rng.below(3)));
    }
    return BlockStream::basis(random_index_set(rng), field);
  }
  switch (rng.below(4)) {
    case 0:
      return BlockStream::tail_of(random_stream(rng, field, depth - 1),
                                  1 + rng.below(2));
    case 1: {
      BlockStream rest = random_stream(rng, field, depth - 1);
      BlockSeq head = random_block_seq(rng, field, 4, 2);
      return BlockStream::concat(head, rest);
    }
    case 2: {
      std::vector<BlockStream> sources{random_stream(rng, field, depth - 1),
                                       random_stream(rng, field, depth - 1)};
      return BlockStream::interleave(std::move(sources),
                                     InterleaveSchedule::round_robin(2));
    }
    default:
      return BlockStream::sparse(random_stream(rng, field, depth - 1),
                                 rng.chance(1, 2)
                                     ? IntervalSeq::singletons()
                                     : IntervalSeq::affine(0, 1 + rng.below(2),
                                                           rng.below(2)));
  }
}

IntervalSeq random_separated_intervals(SplitMix64& rng) {
  std::vector<IntervalSeq::Interval> head{{0, 0}};
  std::uint64_t lo = 3 + rng.below(3);
  for (int m = 0; m < 24; ++m) {
    std::uint64_t len = 1 + rng.below(3);
    head.push_back({lo, lo + len - 1});
    lo += len + 2 + rng.below(4);  // gap >= 3
  }
  return IntervalSeq::explicit_then_affine(std::move(head), 2, 3);
}

}  // namespace blockspace
