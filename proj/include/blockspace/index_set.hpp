#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace blockspace {

/// A decidable subset of the naturals: a finite union of arithmetic
/// progressions {offset + k*stride : k >= 0} plus explicit finite
/// include/exclude corrections. Membership, emptiness, infiniteness and
/// the n-th element are all exact.
class IndexSet {
 public:
  struct Ap {
    std::uint64_t offset;
    std::uint64_t stride;  // >= 1
  };

  IndexSet() = default;

  static IndexSet all() { return IndexSet::ap(0, 1); }
  static IndexSet evens() { return IndexSet::ap(0, 2); }
  static IndexSet odds() { return IndexSet::ap(1, 2); }
  static IndexSet ap(std::uint64_t offset, std::uint64_t stride);
  /// {k : the base-adic valuation of k equals v}; base >= 2.
  static IndexSet valuation_class(std::uint64_t base, unsigned v);
  static IndexSet finite(std::vector<std::uint64_t> elements);
  static IndexSet union_of(std::span<const IndexSet> sets);

  IndexSet with_excluded(std::vector<std::uint64_t> extra) const;

  bool contains(std::uint64_t k) const;
  bool empty() const;
  bool infinite() const { return !aps_.empty(); }

  /// n-th element in ascending order; throws OutOfRange when the set is
  /// finite and exhausted.
  std::uint64_t nth(std::uint64_t n) const;

  /// Exact disjointness test.
  static bool disjoint(const IndexSet& a, const IndexSet& b);
  static IndexSet intersect(const IndexSet& a, const IndexSet& b);

  /// Sound semi-decision of `small ⊆ big` (ignoring small's exclusions):
  /// true only with a periodicity proof.
  static bool subset_proved(const IndexSet& small, const IndexSet& big);

  /// Eventual periodicity: for k >= threshold, contains(k) depends only on
  /// k % period. Absent when the period would be unreasonably large.
  struct Periodicity {
    std::uint64_t threshold;
    std::uint64_t period;
    std::vector<bool> residues;
  };
  std::optional<Periodicity> eventual_period(std::uint64_t period_cap = 1 << 20) const;

  const std::vector<Ap>& aps() const { return aps_; }
  const std::vector<std::uint64_t>& included() const { return include_; }
  const std::vector<std::uint64_t>& excluded() const { return exclude_; }

 private:
  void normalize();

  std::vector<Ap> aps_;
  std::vector<std::uint64_t> include_;  // sorted, not covered by exclude_
  std::vector<std::uint64_t> exclude_;  // sorted
};

}  // namespace blockspace
