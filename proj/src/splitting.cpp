#include "blockspace/splitting.hpp"

#include <numeric>

namespace blockspace {

namespace {

bool interval_inside(const IndexSet& s, std::uint64_t lo, std::uint64_t hi) {
  for (std::uint64_t k = lo; k <= hi; ++k)
    if (!s.contains(k)) return false;
  return true;
}

bool interval_avoids(const IndexSet& s, std::uint64_t lo, std::uint64_t hi) {
  for (std::uint64_t k = lo; k <= hi; ++k)
    if (s.contains(k)) return false;
  return true;
}

}  // namespace

IntervalPartition induced_partition(const BlockStream& stream) {
  return IntervalPartition::induced(stream);
}

SplitVerdict block_splits(const IndexSet& s, const IntervalPartition& p,
                          std::size_t horizon) {
  SplitVerdict v;
  v.horizon = horizon;
  for (std::size_t n = 0; n <= horizon; ++n) {
    auto [lo, hi] = p.interval(n);
    if (interval_inside(s, lo, hi)) ++v.hits;
    if (interval_avoids(s, lo, hi)) ++v.misses;
  }
  auto pp = p.periodicity();
  auto sp = s.eventual_period();
  if (!pp || !sp) return v;

  // Beyond both thresholds the predicate pair (inside, avoids) is periodic
  // in n: every pp->steps indices the interval shifts by pp->offset, and
  // after enough rounds the shift is 0 mod the set's period.
  std::uint64_t rounds = sp->period / std::gcd(pp->offset % sp->period == 0
                                                   ? sp->period
                                                   : pp->offset % sp->period,
                                               sp->period);
  std::uint64_t combined = pp->steps * rounds;
  std::uint64_t start = pp->index_threshold;
  while (p.interval(start).first < sp->threshold) ++start;
  bool inside_recurs = false, avoids_recurs = false;
  for (std::uint64_t n = start; n < start + combined; ++n) {
    auto [lo, hi] = p.interval(n);
    if (interval_inside(s, lo, hi)) inside_recurs = true;
    if (interval_avoids(s, lo, hi)) avoids_recurs = true;
  }
  v.proof = (inside_recurs && avoids_recurs) ? SplitProof::SplitsProven
                                             : SplitProof::NotSplittingProven;
  return v;
}

bool z_membership(const Vec& v, const IndexSet& s) {
  for (const auto& [index, coeff] : v.entries())
    if (!s.contains(index)) return false;
  return true;
}

std::pair<BlockSeq, BlockSeq> split_block_sequence(const BlockStream& stream,
                                                   const IndexSet& s,
                                                   std::size_t horizon) {
  IntervalPartition p = IntervalPartition::induced(stream);
  std::vector<Vec> inside, outside;
  for (std::size_t n = 0; n <= horizon; ++n) {
    auto [lo, hi] = p.interval(n);
    if (interval_inside(s, lo, hi)) inside.push_back(stream.block(n));
    if (interval_avoids(s, lo, hi)) outside.push_back(stream.block(n));
  }
  const Field& field = stream.field();
  return {BlockSeq::validate(std::move(inside), field),
          BlockSeq::validate(std::move(outside), field)};
}

}  // namespace blockspace
