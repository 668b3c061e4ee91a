#pragma once

#include <cstdint>
#include <utility>

#include "blockspace/stream.hpp"

namespace blockspace {

/// The partition read off a stream's supports:
/// P_0 = [0, max supp(x_0)], P_{n+1} = [max supp(x_n)+1, max supp(x_{n+1})].
IntervalPartition induced_partition(const BlockStream& stream);

enum class SplitProof { SplitsProven, NotSplittingProven, CountsOnly };

struct SplitVerdict {
  std::size_t hits = 0;    // n <= horizon with P_n ⊆ S
  std::size_t misses = 0;  // n <= horizon with P_n ∩ S = ∅
  std::size_t horizon = 0;
  SplitProof proof = SplitProof::CountsOnly;
};

/// Exact hit/miss counts over n <= horizon; when both the partition and the
/// index set are eventually periodic the infinitude of both sides is
/// decided exactly.
SplitVerdict block_splits(const IndexSet& s, const IntervalPartition& p,
                          std::size_t horizon);

/// Membership in Z_S = span{e_n : n in S}: supp(v) ⊆ S.
bool z_membership(const Vec& v, const IndexSet& s);

/// With P induced by B: B_0 keeps the blocks whose interval lies inside S,
/// B_1 those whose interval avoids S, both cut at n <= horizon.
std::pair<BlockSeq, BlockSeq> split_block_sequence(const BlockStream& stream,
                                                   const IndexSet& s,
                                                   std::size_t horizon);

}  // namespace blockspace
