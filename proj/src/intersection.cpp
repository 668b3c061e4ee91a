#include "blockspace/intersection.hpp"

#include <algorithm>

namespace blockspace {

std::optional<std::vector<std::uint8_t>> expand_in(const BlockSeq& A, const Vec& v) {
  const Field& field = A.field();
  std::vector<std::uint8_t> coords(A.size(), 0);
  Vec rest = v;
  for (std::size_t i = 0; i < A.size(); ++i) {
    std::uint8_t lead = A[i].coeff(A[i].min_support());
    std::uint8_t c = field.mul(rest.coeff(A[i].min_support()), field.inv(lead));
    if (c != 0) {
      coords[i] = c;
      rest = rest.add(A[i].scaled(field.neg(c)));
    }
  }
  if (!rest.is_zero()) return std::nullopt;
  return coords;
}

BlockIntersection block_intersection(const BlockSeq& A, const BlockSeq& B,
                                     std::size_t enumeration_cap) {
  require_same_field(A.field(), B.field());
  const Field& field = A.field();

  // The construction quantifies over the members of <A> ∩ <B>, so the
  // intersection is realized as a set: both spans enumerated and merged.
  std::vector<Vec> span_a = Subspace::span_of(A).enumerate(enumeration_cap);
  std::vector<Vec> span_b = Subspace::span_of(B).enumerate(enumeration_cap);
  std::vector<Vec> common;
  std::set_intersection(span_a.begin(), span_a.end(), span_b.begin(), span_b.end(),
                        std::back_inserter(common),
                        [](const Vec& x, const Vec& y) { return canonical_less(x, y); });

  BlockIntersection out{BlockSeq(field), {}};
  if (common.size() <= 1) return out;  // only the zero vector

  // A-supports of the common vectors; K = every index that participates.
  std::vector<std::vector<std::uint32_t>> masks;  // per nonzero common vector
  std::vector<Vec> nonzero;
  std::vector<std::uint32_t> K;
  for (const Vec& w : common) {
    if (w.is_zero()) continue;
    auto coords = expand_in(A, w);
    if (!coords) throw Error(Errc::OutOfRange, "intersection element outside span(A)");
    std::vector<std::uint32_t> mask;
    for (std::uint32_t i = 0; i < coords->size(); ++i)
      if ((*coords)[i] != 0) mask.push_back(i);
    K.insert(K.end(), mask.begin(), mask.end());
    masks.push_back(std::move(mask));
    nonzero.push_back(w);
  }
  std::sort(K.begin(), K.end());
  K.erase(std::unique(K.begin(), K.end()), K.end());

  // ~-classes: refine {K} by membership in each vector's A-support.
  std::vector<std::vector<std::uint32_t>> classes{K};
  for (const auto& mask : masks) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& cls : classes) {
      std::vector<std::uint32_t> inside, outside;
      for (std::uint32_t n : cls)
        (std::binary_search(mask.begin(), mask.end(), n) ? inside : outside)
            .push_back(n);
      if (!inside.empty()) next.push_back(std::move(inside));
      if (!outside.empty()) next.push_back(std::move(outside));
    }
    classes = std::move(next);
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  // The classes must be intervals of K (no interleaving); a violation here
  // would be a counterexample to the finitary block-closure claim and is
  // surfaced loudly rather than patched over.
  for (std::size_t c = 0; c + 1 < classes.size(); ++c)
    if (classes[c].back() > classes[c + 1].front())
      throw Error(Errc::NotBlockOrdered,
                  "intersection classes interleave; block-closure violated");

  // One representative per class: the canonical-least nonzero vector whose
  // A-support lies inside (hence equals) the class.
  std::vector<Vec> reps;
  for (const auto& cls : classes) {
    std::optional<Vec> rep;
    for (std::size_t i = 0; i < nonzero.size(); ++i) {
      bool inside = std::includes(cls.begin(), cls.end(), masks[i].begin(),
                                  masks[i].end());
      if (inside) {
        rep = nonzero[i];  // `common` is canonically sorted already
        if (masks[i].size() != cls.size())
          throw Error(Errc::NotBlockOrdered,
                      "class layer contains a vector with proper sub-support");
        break;
      }
    }
    if (!rep)
      throw Error(Errc::NotBlockOrdered, "class without representative");
    reps.push_back(std::move(*rep));
  }

  // dim(<A> ∩ <B>) = log_q |common|; the representatives must span it.
  std::size_t dim = 0;
  for (std::size_t size = 1; size < common.size(); size *= field.q()) ++dim;
  if (reps.size() != dim)
    throw Error(Errc::NotBlockOrdered,
                "representatives do not span the intersection");

  out.blocks = BlockSeq::validate(reps, field);
  out.trace.participants = std::move(K);
  out.trace.classes = std::move(classes);
  out.trace.representatives = std::move(reps);
  return out;
}

}  // namespace blockspace
