#pragma once

#include <variant>

#include "blockspace/stream.hpp"
#include "blockspace/subspace.hpp"

namespace blockspace {

/// span(A/N) ∩ span(B) = {0}, proved for all extensions.
struct DisjointAt {
  std::size_t n;
};
/// A nonzero common vector plus structural evidence that common vectors
/// recur (the intersection is infinite-dimensional).
struct CompatibleWitness {
  Vec v;
};
struct UnknownDisjointness {};

using DisjointnessVerdict =
    std::variant<DisjointAt, CompatibleWitness, UnknownDisjointness>;

/// Semi-decision of almost disjointness through the stream algebra:
/// support separation and exact basis-set arithmetic prove DisjointAt;
/// containment and pattern-recurrence arguments prove CompatibleWitness;
/// everything else is Unknown.
DisjointnessVerdict bounded_almost_disjoint(const BlockStream& A,
                                            const BlockStream& B,
                                            std::size_t horizon);

/// The exact basis-index set of a stream when it has one (Basis, or Tail
/// chains over Basis): span(stream) = span{e_k : k in set}.
std::optional<IndexSet> effective_basis_set(const BlockStream& s);

}  // namespace blockspace
