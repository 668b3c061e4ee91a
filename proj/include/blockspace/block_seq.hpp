#pragma once

#include <cstddef>
#include <vector>

#include "blockspace/vector.hpp"

namespace blockspace {

/// A finite block sequence: nonzero vectors with strictly increasing
/// supports (max supp of each block below min supp of the next).
class BlockSeq {
 public:
  explicit BlockSeq(Field field) : field_(field) {}

  /// Validating constructor; throws NotBlockOrdered(position) /
  /// ZeroVector(position) on bad input. The empty list is valid.
  static BlockSeq validate(std::vector<Vec> vectors, Field field);

  const Field& field() const { return field_; }
  bool empty() const { return blocks_.empty(); }
  std::size_t size() const { return blocks_.size(); }
  const Vec& operator[](std::size_t i) const { return blocks_[i]; }
  const std::vector<Vec>& blocks() const { return blocks_; }
  auto begin() const { return blocks_.begin(); }
  auto end() const { return blocks_.end(); }

  /// max(supp) of the last block; throws ZeroVector when empty.
  std::uint32_t max_support() const;

  BlockSeq prefix(std::size_t n) const;  // r_n; OutOfRange if n > size
  BlockSeq tail(std::size_t n) const;    // A/n; OutOfRange if n > size

  /// Appends a block; the caller guarantees block order (checked).
  BlockSeq appended(const Vec& v) const;

  friend bool operator==(const BlockSeq& a, const BlockSeq& b) {
    return a.field_ == b.field_ && a.blocks_ == b.blocks_;
  }
  friend bool operator!=(const BlockSeq& a, const BlockSeq& b) { return !(a == b); }

 private:
  Field field_;
  std::vector<Vec> blocks_;
};

/// Least N such that every block of A/N lies entirely above max(supp(a));
/// 0 for empty a. For finite A with no block above, throws NoSuchTail.
std::size_t depth_index(const BlockSeq& A, const BlockSeq& a);

/// a followed by B with the overlapping head of B dropped (the tail at
/// depth_index is applied here; a finite B may be absorbed entirely).
BlockSeq concat(const BlockSeq& a, const BlockSeq& B);

}  // namespace blockspace
