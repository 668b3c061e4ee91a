#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "blockspace/stream.hpp"
#include "blockspace/subspace.hpp"

namespace blockspace {

/// Least M with q^M > n * q^(ceil(M/2)), i.e. the window dimension at which
/// a union of n half-dimensional subspaces cannot cover the space.
std::size_t min_window_dim(unsigned q, std::uint64_t n);

/// An indexed family of block subspaces (each given by a stream), pairwise
/// almost disjoint. Infinite families index members by valuation classes;
/// finite families are explicit lists.
class SubspaceFamily {
 public:
  /// V_n spanned by the basis vectors whose index has base-adic valuation n.
  static SubspaceFamily valuation(Field field, std::uint64_t base);
  /// Valuation family with a per-member decoration (tail / sparse thinning)
  /// drawn deterministically from `seed`; supports stay inside the classes.
  static SubspaceFamily decorated(Field field, std::uint64_t base,
                                  std::uint64_t seed);
  static SubspaceFamily finite_family(std::vector<BlockStream> members);

  bool infinite() const { return infinite_; }
  std::size_t finite_size() const { return members_.size(); }
  const Field& field() const { return field_; }
  BlockStream member(std::size_t n) const;

  /// Pairwise bounded_almost_disjoint certificates (DisjointAt) among the
  /// first `count` members.
  bool certify(std::size_t count, std::size_t horizon) const;

 private:
  explicit SubspaceFamily(Field field) : field_(field) {}
  Field field_;
  bool infinite_ = false;
  std::uint64_t base_ = 2;
  std::uint64_t seed_ = 0;
  bool decorate_ = false;
  std::vector<BlockStream> members_;
};

/// Blocks of the stream supported inside [0, window).
std::vector<Vec> window_blocks(const BlockStream& s, std::uint32_t window);

/// Visits the nonzero elements of the span of a block-ordered list in
/// canonical order; stops early when the visitor returns true. Returns
/// whether the visitor accepted an element.
bool visit_span_ascending(std::span<const Vec> blocks, const Field& field,
                          const std::function<bool(const Vec&)>& visitor);

/// One greedy step: the canonical-least x in V_n's window slice avoiding
/// every U_k = V_k-slice + span(chosen), k < n. The window doubles until
/// the avoidance set is provably nonempty (hard cap 2^14: WindowExhausted).
Vec avoid_step(const SubspaceFamily& family, std::span<const Vec> chosen,
               std::size_t n, std::uint32_t window);

/// Iterated avoidance producing x_0..x_{steps-1} with, for all k < n:
/// span{x_i : i <= n} ∩ V_k-slice ⊆ span{x_i : i <= k} (checked per step).
/// Requires a genuinely infinite indexed family.
std::vector<Vec> avoid_construct(const SubspaceFamily& family, std::size_t steps,
                                 std::uint32_t window = 16);

/// Avoidance against a finite family (size >= 2): span(result) meets every
/// member's window slice trivially, verified per step.
std::vector<Vec> trivial_avoid_construct(const SubspaceFamily& family,
                                         std::size_t steps,
                                         std::uint32_t window = 0);

/// Interleaving combinator (the schedule must be infinite-to-one).
BlockStream interleave_build(std::vector<BlockStream> sources,
                             InterleaveSchedule schedule);

/// Sparse subsequence: keep indices n_0 = 0, n_{k+1} = max(I_m) + 1 for the
/// least m with n_k < min(I_m).
BlockStream sparse_subsequence(BlockStream stream, IntervalSeq intervals);

/// For each chain member A_n, the least N <= horizon such that every block
/// of B/N within the horizon lies in span(prefix(A_n, horizon)); nullopt
/// when no such N is certified at this horizon.
std::vector<std::optional<std::size_t>> weak_diag_check(
    const BlockStream& B, std::span<const BlockStream> chain, std::size_t horizon);

enum class DiagVerdict { Holds, Fails, Unknown };

/// Checks B/n <= A_{d_A(r_n(B))} for all n <= horizon, blockwise within the
/// horizon. Fails only on a definite violation (a block that no longer
/// prefix of the chain member could absorb). IndexBeyondChain when the
/// depth exceeds the supplied chain.
DiagVerdict diagonalize_check(const BlockStream& B, const BlockStream& A,
                              std::span<const BlockStream> chain,
                              std::size_t horizon);

}  // namespace blockspace
