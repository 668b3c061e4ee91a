#pragma once

#include <optional>
#include <span>
#include <vector>

#include "blockspace/block_seq.hpp"

namespace blockspace {

/// A finite-dimensional subspace of span{e_0, ..., e_{window-1}}, stored as
/// a reduced row-echelon basis (pivots = leading indices, strictly
/// increasing, pivot coefficient 1, pivot column cleared elsewhere).
/// Binary operations re-embed into the larger window automatically.
class Subspace {
 public:
  Subspace(Field field, std::uint32_t window) : field_(field), window_(window) {}

  /// Span of arbitrary vectors; the window grows to fit every support.
  static Subspace span_of(std::span<const Vec> vectors, Field field,
                          std::uint32_t window = 0);
  static Subspace span_of(const BlockSeq& seq, std::uint32_t window = 0) {
    return span_of(seq.blocks(), seq.field(), window);
  }

  const Field& field() const { return field_; }
  std::uint32_t window() const { return window_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& basis() const { return rows_; }

  Subspace embedded(std::uint32_t window) const;

  /// Residual of v after elimination against the basis.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return reduce(v).is_zero(); }
  bool contains_all(const Subspace& other) const;

  /// All q^dim elements in canonical order, zero first. Throws TooLarge
  /// beyond the cap.
  std::vector<Vec> enumerate(std::size_t cap = std::size_t{1} << 20) const;

  /// Intersection by the kernel of the stacked bases: independent of any
  /// block-structure reasoning (this is the oracle route).
  static Subspace intersect(const Subspace& u, const Subspace& v);
  static Subspace sum(const Subspace& u, const Subspace& v);

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_;
  }

  /// Elements supported inside [lo, hi].
  Subspace slice(std::uint32_t lo, std::uint32_t hi) const;

  /// All k in [0, window) with
  /// dim(U ∩ <e_0..e_k>) + dim(U ∩ <e_{k+1}..e_{window-1}>) = dim U.
  std::vector<std::uint32_t> split_points() const;

  /// Block basis, if one exists: the split points must cut U into
  /// one-dimensional layers; each layer contributes its canonical-least
  /// nonzero vector.
  std::optional<BlockSeq> block_basis() const;

 private:
  Field field_;
  std::uint32_t window_;
  std::vector<Vec> rows_;
};

/// A <= B in the reduction order: every vector of A lies in span(B).
bool block_leq(const BlockSeq& A, const BlockSeq& B);

}  // namespace blockspace
