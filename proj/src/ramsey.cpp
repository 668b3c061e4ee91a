#include "blockspace/ramsey.hpp"

#include <algorithm>

namespace blockspace {

bool le_fin(const BlockSeq& a, const BlockSeq& b) {
  return block_leq(a, b);
}

std::vector<BlockSeq> le_fin_predecessors(const BlockSeq& b) {
  if (b.size() > 10)
    throw Error(Errc::TooLarge, "predecessor enumeration capped at dimension 10");
  const Field& field = b.field();
  std::vector<Vec> elements = Subspace::span_of(b).enumerate();
  // Nonzero span elements in canonical order; extensions respect block_lt.
  std::vector<Vec> nonzero(elements.begin() + (elements.empty() ? 0 : 1),
                           elements.end());
  std::vector<BlockSeq> out;
  std::vector<Vec> current;
  auto rec = [&](auto&& self) -> void {
    out.push_back(BlockSeq::validate(current, field));
    for (const Vec& v : nonzero) {
      if (!current.empty() && !block_lt(current.back(), v)) continue;
      current.push_back(v);
      self(self);
      current.pop_back();
    }
  };
  rec(rec);
  return out;
}

namespace {

DepthResult depth_impl(const std::function<BlockSeq(std::size_t)>& prefix_of,
                       const IndexSet* superset, const BlockSeq& a,
                       std::size_t horizon) {
  DepthResult out;
  if (a.empty()) {
    out.finite = 0;
    return out;
  }
  if (superset) {
    for (const Vec& v : a)
      for (const auto& [index, coeff] : v.entries())
        if (!superset->contains(index)) {
          out.infinite_proven = true;
          return out;
        }
  }
  for (std::size_t n = 1; n <= horizon; ++n) {
    if (le_fin(a, prefix_of(n))) {
      out.finite = n;
      return out;
    }
  }
  return out;
}

}  // namespace

DepthResult depth(const BlockStream& B, const BlockSeq& a, std::size_t horizon) {
  IndexSet superset = B.support_superset();
  return depth_impl([&](std::size_t n) { return B.prefix(n); }, &superset, a,
                    horizon);
}

DepthResult depth(const BlockSeq& B, const BlockSeq& a, std::size_t horizon) {
  std::size_t h = std::min(horizon, B.size());
  return depth_impl([&](std::size_t n) { return B.prefix(n); }, nullptr, a, h);
}

namespace {

std::vector<BlockSeq> extensions_from_prefix(const BlockSeq& a,
                                             const BlockSeq& within) {
  if (!le_fin(a, within))
    throw Error(Errc::NotAReduction, "a is not a finite reduction of the prefix");
  const Field& field = within.field();
  // Admissible tail: the blocks lying entirely above a. Supports never
  // cancel across blocks, so the admissible one-step vectors are exactly
  // the nonzero span of these blocks.
  std::vector<Vec> admissible;
  for (const Vec& v : within)
    if (a.empty() || v.min_support() > a.max_support()) admissible.push_back(v);
  std::vector<Vec> span =
      Subspace::span_of(admissible, field).enumerate();
  std::vector<BlockSeq> out;
  for (const Vec& x : span) {
    if (x.is_zero()) continue;
    out.push_back(a.appended(x));
  }
  return out;
}

}  // namespace

std::vector<BlockSeq> ellentuck_extensions(const BlockSeq& a, const BlockStream& A,
                                           std::size_t horizon) {
  return extensions_from_prefix(a, A.prefix(horizon));
}

std::vector<BlockSeq> ellentuck_extensions(const BlockSeq& a, const BlockSeq& A) {
  return extensions_from_prefix(a, A);
}

}  // namespace blockspace
