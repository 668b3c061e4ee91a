#include "blockspace/block_seq.hpp"

namespace blockspace {

BlockSeq BlockSeq::validate(std::vector<Vec> vectors, Field field) {
  BlockSeq seq(field);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    require_same_field(vectors[i].field(), field);
    if (vectors[i].is_zero())
      throw Error(Errc::ZeroVector, "zero vector at position " + std::to_string(i), i);
    if (i > 0 && !block_lt(vectors[i - 1], vectors[i]))
      throw Error(Errc::NotBlockOrdered,
                  "vector at position " + std::to_string(i) +
                      " does not lie above its predecessor",
                  i);
  }
  seq.blocks_ = std::move(vectors);
  return seq;
}

std::uint32_t BlockSeq::max_support() const {
  if (blocks_.empty()) throw Error(Errc::ZeroVector, "empty sequence has no support");
  return blocks_.back().max_support();
}

BlockSeq BlockSeq::prefix(std::size_t n) const {
  if (n > blocks_.size())
    throw Error(Errc::OutOfRange, "prefix length " + std::to_string(n) +
                                      " exceeds sequence length " +
                                      std::to_string(blocks_.size()));
  BlockSeq out(field_);
  out.blocks_.assign(blocks_.begin(), blocks_.begin() + static_cast<long>(n));
  return out;
}

BlockSeq BlockSeq::tail(std::size_t n) const {
  if (n > blocks_.size())
    throw Error(Errc::OutOfRange, "tail offset " + std::to_string(n) +
                                      " exceeds sequence length " +
                                      std::to_string(blocks_.size()));
  BlockSeq out(field_);
  out.blocks_.assign(blocks_.begin() + static_cast<long>(n), blocks_.end());
  return out;
}

BlockSeq BlockSeq::appended(const Vec& v) const {
  std::vector<Vec> vs = blocks_;
  vs.push_back(v);
  return validate(std::move(vs), field_);
}

std::size_t depth_index(const BlockSeq& A, const BlockSeq& a) {
  if (a.empty()) return 0;
  std::uint32_t bound = a.max_support();
  for (std::size_t n = 0; n < A.size(); ++n)
    if (A[n].min_support() > bound) return n;
  throw Error(Errc::NoSuchTail, "no block of the sequence lies above index " +
                                    std::to_string(bound));
}

BlockSeq concat(const BlockSeq& a, const BlockSeq& B) {
  require_same_field(a.field(), B.field());
  if (a.empty()) return B;
  std::uint32_t bound = a.max_support();
  std::vector<Vec> vs = a.blocks();
  for (const Vec& v : B)
    if (v.min_support() > bound) vs.push_back(v);
  return BlockSeq::validate(std::move(vs), a.field());
}

}  // namespace blockspace
