#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "blockspace/subspace.hpp"

namespace blockspace {

/// Witness data from the block-intersection construction: the participating
/// A-indices K, their partition into ~-classes (each an interval of K in
/// ascending order), and one representative vector per class whose
/// A-support is exactly that class.
struct IntersectionTrace {
  std::vector<std::uint32_t> participants;
  std::vector<std::vector<std::uint32_t>> classes;
  std::vector<Vec> representatives;
};

struct BlockIntersection {
  BlockSeq blocks;
  IntersectionTrace trace;
};

/// Coordinates of v in the block sequence A (one coefficient per block),
/// or nullopt when v lies outside span(A). Exact: block supports are
/// separated, so each coefficient is read off the block's leading index.
std::optional<std::vector<std::uint8_t>> expand_in(const BlockSeq& A, const Vec& v);

/// A block sequence C with span(C) = span(A) ∩ span(B), computed by the
/// class/representative construction (set-enumerated intersection, never
/// the stacked-kernel oracle). Empty intersection yields empty C.
BlockIntersection block_intersection(const BlockSeq& A, const BlockSeq& B,
                                     std::size_t enumeration_cap = std::size_t{1}
                                                                   << 20);

}  // namespace blockspace
