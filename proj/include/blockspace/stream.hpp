#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "blockspace/block_seq.hpp"
#include "blockspace/index_set.hpp"

namespace blockspace {

/// Increasing finite intervals [lo_m, hi_m] with lo_{m+1} > hi_m, possibly
/// with gaps: an explicit head followed by an affine continuation.
class IntervalSeq {
 public:
  using Interval = std::pair<std::uint64_t, std::uint64_t>;  // [lo, hi]

  /// I_m = {m}.
  static IntervalSeq singletons() { return affine(0, 1, 0); }
  /// lo_0 = start, every interval `len` wide, `gap` unused indices between.
  static IntervalSeq affine(std::uint64_t start, std::uint64_t len, std::uint64_t gap);
  static IntervalSeq explicit_then_affine(std::vector<Interval> head,
                                          std::uint64_t len, std::uint64_t gap);

  Interval interval(std::uint64_t m) const;

 private:
  std::vector<Interval> head_;
  std::uint64_t cont_start_ = 0;
  std::uint64_t len_ = 1;
  std::uint64_t gap_ = 0;
};

/// Consecutive finite intervals tiling the naturals from 0: explicit block
/// lengths followed by a constant-length continuation, or the partition
/// induced by a block stream's supports.
class BlockStream;
class IntervalPartition {
 public:
  using Interval = std::pair<std::uint64_t, std::uint64_t>;

  static IntervalPartition uniform(std::uint64_t len);
  static IntervalPartition from_lengths(std::vector<std::uint64_t> lengths,
                                        std::uint64_t continuation_len);
  static IntervalPartition induced(const BlockStream& stream);

  Interval interval(std::uint64_t n) const;

  /// Eventual affinity: for n >= index_threshold, interval(n + steps) =
  /// interval(n) shifted by `offset`. Absent when no proof is available.
  struct Periodicity {
    std::uint64_t index_threshold;
    std::uint64_t steps;
    std::uint64_t offset;
  };
  std::optional<Periodicity> periodicity() const;

 private:
  std::vector<std::uint64_t> lengths_;
  std::uint64_t cont_len_ = 1;
  std::shared_ptr<const BlockStream> induced_;
};

/// Assignment of positions to sources; every source index must appear in
/// the eventually periodic part (infinite preimage).
class InterleaveSchedule {
 public:
  static InterleaveSchedule round_robin(std::size_t sources);
  static InterleaveSchedule eventually_periodic(std::vector<std::uint32_t> head,
                                                std::vector<std::uint32_t> cycle);
  std::uint32_t source(std::uint64_t position) const;
  std::uint32_t max_source() const;
  /// Sources with infinite preimage (those named in the periodic part).
  std::vector<std::uint32_t> recurring_sources() const;

 private:
  std::vector<std::uint32_t> head_;
  std::vector<std::uint32_t> cycle_;
};

/// Lazy deterministic producer of an infinite block sequence, built from a
/// closed constructor algebra. Evaluation is pure: block(n) is a function
/// of the structure and n alone.
class BlockStream {
 public:
  static BlockStream basis(IndexSet set, Field field);
  static BlockStream pattern(BlockSeq shape, std::uint32_t shift);
  static BlockStream concat(BlockSeq prefix, BlockStream rest);
  static BlockStream tail_of(BlockStream inner, std::size_t drop);
  static BlockStream interleave(std::vector<BlockStream> sources,
                                InterleaveSchedule schedule);
  static BlockStream sparse(BlockStream inner, IntervalSeq intervals);

  const Field& field() const { return field_; }

  Vec block(std::size_t n) const;
  BlockSeq prefix(std::size_t n) const;

  /// An IndexSet containing every index that can ever appear in a support.
  IndexSet support_superset() const;

  enum class Kind { Basis, Pattern, Concat, Tail, Interleave, Sparse };
  Kind kind() const;
  const IndexSet& basis_set() const;              // Kind::Basis
  const BlockSeq& pattern_shape() const;          // Kind::Pattern
  std::uint32_t pattern_shift() const;            // Kind::Pattern
  const BlockSeq& concat_prefix() const;          // Kind::Concat
  BlockStream concat_rest() const;                // Kind::Concat
  BlockStream tail_inner() const;                 // Kind::Tail
  std::size_t tail_drop() const;                  // Kind::Tail
  const std::vector<BlockStream>& sources() const;  // Kind::Interleave

  /// Indices of the underlying stream retained by a Sparse node, following
  /// n_0 = 0, n_{k+1} = max(I_m) + 1 for the least m with n_k < min(I_m).
  static std::vector<std::uint64_t> sparse_indices(const IntervalSeq& intervals,
                                                   std::size_t count);

 private:
  struct Node;
  BlockStream(std::shared_ptr<const Node> node, Field field)
      : node_(std::move(node)), field_(field) {}

  std::shared_ptr<const Node> node_;
  Field field_;
};

/// Least N with every block of A/N above max(supp(a)); 0 for empty a.
std::size_t depth_index(const BlockStream& A, const BlockSeq& a);

/// a followed by A with the overlapping head of A dropped.
BlockStream concat(const BlockSeq& a, const BlockStream& A);

}  // namespace blockspace
