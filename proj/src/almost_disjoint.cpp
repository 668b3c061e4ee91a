#include "blockspace/almost_disjoint.hpp"

#include <algorithm>
#include <numeric>

namespace blockspace {

namespace {

/// Superset of the indices appearing in supports of blocks N onward;
/// exact for basis/tail structure, conservative elsewhere.
IndexSet tail_support_superset(const BlockStream& s, std::size_t n) {
  if (n == 0) return s.support_superset();
  switch (s.kind()) {
    case BlockStream::Kind::Tail:
      return tail_support_superset(s.tail_inner(), n + s.tail_drop());
    case BlockStream::Kind::Concat: {
      const BlockSeq& head = s.concat_prefix();
      if (n >= head.size())
        return tail_support_superset(s.concat_rest(), n - head.size());
      std::vector<std::uint64_t> fixed;
      for (std::size_t i = n; i < head.size(); ++i)
        for (const auto& [index, coeff] : head[i].entries()) fixed.push_back(index);
      std::vector<IndexSet> parts{IndexSet::finite(std::move(fixed)),
                                  s.concat_rest().support_superset()};
      return IndexSet::union_of(parts);
    }
    case BlockStream::Kind::Basis: {
      std::vector<std::uint64_t> dropped;
      for (std::size_t i = 0; i < n; ++i) dropped.push_back(s.basis_set().nth(i));
      return s.basis_set().with_excluded(std::move(dropped));
    }
    default:
      return s.support_superset();
  }
}

/// Blocks of a pattern stream whose supports fit below `window`.
std::vector<Vec> pattern_prefix_below(const BlockStream& s, std::uint32_t window) {
  std::vector<Vec> out;
  for (std::size_t n = 0;; ++n) {
    Vec b = s.block(n);
    if (b.max_support() >= window) break;
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace

std::optional<IndexSet> effective_basis_set(const BlockStream& s) {
  switch (s.kind()) {
    case BlockStream::Kind::Basis:
      return s.basis_set();
    case BlockStream::Kind::Tail: {
      auto inner = effective_basis_set(s.tail_inner());
      if (!inner) return std::nullopt;
      std::vector<std::uint64_t> dropped;
      for (std::size_t i = 0; i < s.tail_drop(); ++i) dropped.push_back(inner->nth(i));
      return inner->with_excluded(std::move(dropped));
    }
    default:
      return std::nullopt;
  }
}

DisjointnessVerdict bounded_almost_disjoint(const BlockStream& A,
                                            const BlockStream& B,
                                            std::size_t horizon) {
  require_same_field(A.field(), B.field());
  const Field& field = A.field();

  // Exact arithmetic when both spans are basis sets.
  auto sa = effective_basis_set(A);
  auto sb = effective_basis_set(B);
  if (sa && sb) {
    IndexSet common = IndexSet::intersect(*sa, *sb);
    if (common.empty()) return DisjointAt{0};
    if (common.infinite())
      return CompatibleWitness{
          Vec::basis(static_cast<std::uint32_t>(common.nth(0)), field)};
    // Finitely many shared basis indices: a deep enough tail of A clears them.
    std::uint64_t top = common.included().back();
    std::size_t n = 0;
    while (sa->nth(n) <= top) ++n;
    if (n <= horizon) return DisjointAt{n};
    return UnknownDisjointness{};
  }

  // Support separation: disjoint support supersets force trivial meets.
  IndexSet super_b = B.support_superset();
  for (std::size_t n = 0; n <= horizon; ++n) {
    if (IndexSet::disjoint(tail_support_superset(A, n), super_b)) return DisjointAt{n};
    if (n > 0 && A.kind() != BlockStream::Kind::Concat &&
        A.kind() != BlockStream::Kind::Tail && A.kind() != BlockStream::Kind::Basis)
      break;  // deeper tails share the same superset; nothing new to learn
  }

  // One-sided containment in a full basis span: every block of the other
  // stream already lies in it, and blocks recur forever.
  if (sb && IndexSet::subset_proved(A.support_superset(), *sb))
    return CompatibleWitness{A.block(0)};
  if (sa && IndexSet::subset_proved(B.support_superset(), *sa))
    return CompatibleWitness{B.block(0)};

  // Pattern against pattern: spans are invariant under their shifts, so a
  // common vector within one joint period recurs under the lcm shift.
  if (A.kind() == BlockStream::Kind::Pattern &&
      B.kind() == BlockStream::Kind::Pattern) {
    std::uint64_t la = A.pattern_shift(), lb = B.pattern_shift();
    std::uint64_t joint = std::lcm(la, lb);
    std::uint32_t window = static_cast<std::uint32_t>(
        2 * joint + std::max(A.pattern_shape().max_support(),
                             B.pattern_shape().max_support()) +
        1);
    Subspace span_a = Subspace::span_of(pattern_prefix_below(A, window), field, window);
    Subspace span_b = Subspace::span_of(pattern_prefix_below(B, window), field, window);
    Subspace common = Subspace::intersect(span_a, span_b);
    if (common.dim() > 0) {
      Vec least = common.basis()[0];
      if (common.dim() <= 12)
        for (const Vec& v : common.enumerate())
          if (!v.is_zero()) {
            least = v;
            break;
          }
      return CompatibleWitness{std::move(least)};
    }
    return UnknownDisjointness{};
  }

  return UnknownDisjointness{};
}

}  // namespace blockspace
