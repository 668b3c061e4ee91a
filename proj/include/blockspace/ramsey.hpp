#pragma once

#include <optional>

#include "blockspace/stream.hpp"
#include "blockspace/subspace.hpp"

namespace blockspace {

/// Finite-approximation order: every vector of a lies in span(b).
bool le_fin(const BlockSeq& a, const BlockSeq& b);

/// All block sequences (including the empty one) whose vectors lie in
/// span(b), in canonical order (lexicographic on block codes). TooLarge
/// beyond dimension 10.
std::vector<BlockSeq> le_fin_predecessors(const BlockSeq& b);

struct DepthResult {
  std::optional<std::size_t> finite;  // least n with a <=_fin r_n(B)
  bool infinite_proven = false;       // support-separation certificate

  bool is_finite() const { return finite.has_value(); }
};

/// depth_B(a) = min{n : a <=_fin r_n(B)}, searched up to the horizon.
/// Infinite is proven when some vector's support escapes the stream's
/// support superset; otherwise an exhausted search reports an unproven
/// infinite (at-horizon) result.
DepthResult depth(const BlockStream& B, const BlockSeq& a, std::size_t horizon);
DepthResult depth(const BlockSeq& B, const BlockSeq& a, std::size_t horizon);

/// All one-step extensions a⌢x with x in the span of prefix(A, horizon)
/// lying strictly above a, in canonical order of x. The precondition
/// a <=_fin prefix(A, horizon) is enforced (NotAReduction).
std::vector<BlockSeq> ellentuck_extensions(const BlockSeq& a, const BlockStream& A,
                                           std::size_t horizon);
std::vector<BlockSeq> ellentuck_extensions(const BlockSeq& a, const BlockSeq& A);

}  // namespace blockspace
