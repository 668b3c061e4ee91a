#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "blockspace/field.hpp"

namespace blockspace {

/// A finitely supported vector over F_q: sorted (index, coefficient) pairs,
/// no stored coefficient is zero. The empty list is the zero vector.
class Vec {
 public:
  using Entry = std::pair<std::uint32_t, std::uint8_t>;

  /// Normalizing constructor. Pairs may arrive unsorted (they are sorted
  /// here); duplicate indices and coefficients outside [1, q) are errors.
  static Vec make(std::vector<Entry> pairs, Field field);

  static Vec zero(Field field) { return Vec(field); }
  static Vec basis(std::uint32_t index, Field field);

  const Field& field() const { return field_; }
  bool is_zero() const { return entries_.empty(); }
  std::span<const Entry> entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }

  /// Coefficient extractor: the coefficient of e_k, zero if absent.
  std::uint8_t coeff(std::uint32_t k) const;

  /// Throws ZeroVector on the zero vector.
  std::uint32_t min_support() const;
  std::uint32_t max_support() const;

  Vec add(const Vec& other) const;
  Vec scaled(std::uint8_t scalar) const;
  Vec sub(const Vec& other) const { return add(other.scaled(field_.neg(1))); }

  /// Translation by `offset`: e_i -> e_{i+offset}.
  Vec shifted(std::uint32_t offset) const;

  friend bool operator==(const Vec& a, const Vec& b) {
    return a.field_ == b.field_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

  /// Canonical order: interpret the coefficient string as a little-endian
  /// base-q integer (coefficient of e_0 least significant) and compare.
  /// Returns <0, 0, >0.
  static int canonical_cmp(const Vec& a, const Vec& b);

 private:
  explicit Vec(Field field) : field_(field) {}

  Field field_;
  std::vector<Entry> entries_;
};

inline bool canonical_less(const Vec& a, const Vec& b) {
  return Vec::canonical_cmp(a, b) < 0;
}

/// The block order: x < y iff max(supp(x)) < min(supp(y)).
/// Defined only for nonzero vectors; throws ZeroVector otherwise.
bool block_lt(const Vec& x, const Vec& y);

}  // namespace blockspace
