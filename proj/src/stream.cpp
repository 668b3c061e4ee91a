#include "blockspace/stream.hpp"

#include <algorithm>

namespace blockspace {

// ---------------------------------------------------------------- intervals

IntervalSeq IntervalSeq::affine(std::uint64_t start, std::uint64_t len,
                                std::uint64_t gap) {
  if (len == 0) throw Error(Errc::OutOfRange, "intervals must be nonempty");
  IntervalSeq s;
  s.cont_start_ = start;
  s.len_ = len;
  s.gap_ = gap;
  return s;
}

IntervalSeq IntervalSeq::explicit_then_affine(std::vector<Interval> head,
                                              std::uint64_t len,
                                              std::uint64_t gap) {
  if (len == 0) throw Error(Errc::OutOfRange, "intervals must be nonempty");
  std::uint64_t last_hi = 0;
  for (std::size_t m = 0; m < head.size(); ++m) {
    auto [lo, hi] = head[m];
    if (hi < lo) throw Error(Errc::OutOfRange, "interval with hi < lo");
    if (m > 0 && lo <= last_hi)
      throw Error(Errc::OutOfRange, "interval sequence not increasing");
    last_hi = hi;
  }
  IntervalSeq s;
  s.cont_start_ = head.empty() ? 0 : last_hi + gap + 1;
  s.head_ = std::move(head);
  s.len_ = len;
  s.gap_ = gap;
  return s;
}

IntervalSeq::Interval IntervalSeq::interval(std::uint64_t m) const {
  if (m < head_.size()) return head_[m];
  std::uint64_t k = m - head_.size();
  std::uint64_t lo = cont_start_ + k * (len_ + gap_);
  return {lo, lo + len_ - 1};
}

// --------------------------------------------------------------- partitions

IntervalPartition IntervalPartition::uniform(std::uint64_t len) {
  return from_lengths({}, len);
}

IntervalPartition IntervalPartition::from_lengths(
    std::vector<std::uint64_t> lengths, std::uint64_t continuation_len) {
  if (continuation_len == 0) throw Error(Errc::OutOfRange, "empty interval");
  for (std::uint64_t l : lengths)
    if (l == 0) throw Error(Errc::OutOfRange, "empty interval");
  IntervalPartition p;
  p.lengths_ = std::move(lengths);
  p.cont_len_ = continuation_len;
  return p;
}

IntervalPartition IntervalPartition::induced(const BlockStream& stream) {
  IntervalPartition p;
  p.induced_ = std::make_shared<BlockStream>(stream);
  return p;
}

IntervalPartition::Interval IntervalPartition::interval(std::uint64_t n) const {
  if (induced_) {
    // P_0 = [0, max supp(x_0)], P_{n+1} = [max supp(x_n)+1, max supp(x_{n+1})].
    std::uint64_t lo = n == 0 ? 0 : induced_->block(n - 1).max_support() + 1;
    return {lo, induced_->block(n).max_support()};
  }
  std::uint64_t lo = 0;
  for (std::uint64_t i = 0; i < std::min<std::uint64_t>(n, lengths_.size()); ++i)
    lo += lengths_[i];
  std::uint64_t len;
  if (n < lengths_.size()) {
    len = lengths_[n];
  } else {
    lo += (n - lengths_.size()) * cont_len_;
    len = cont_len_;
  }
  return {lo, lo + len - 1};
}

std::optional<IntervalPartition::Periodicity> IntervalPartition::periodicity()
    const {
  if (!induced_) return Periodicity{lengths_.size(), 1, cont_len_};
  // Induced partitions inherit periodicity from the stream's supports.
  switch (induced_->kind()) {
    case BlockStream::Kind::Basis: {
      auto p = induced_->basis_set().eventual_period();
      if (!p) return std::nullopt;
      // Beyond the threshold the n-th element advances by one period every
      // `hits` steps, where hits = residues set per period.
      std::uint64_t hits = 0;
      for (bool r : p->residues) hits += r;
      if (hits == 0) return std::nullopt;
      // Find the first stream index whose basis element clears the threshold.
      std::uint64_t n0 = 0;
      while (induced_->block(n0).max_support() < p->threshold) ++n0;
      return Periodicity{n0 + 1, hits, p->period};
    }
    case BlockStream::Kind::Pattern: {
      const BlockSeq& shape = induced_->pattern_shape();
      return Periodicity{1, shape.size(),
                         static_cast<std::uint64_t>(induced_->pattern_shift())};
    }
    default:
      return std::nullopt;
  }
}

// ---------------------------------------------------------------- schedules

InterleaveSchedule InterleaveSchedule::round_robin(std::size_t sources) {
  if (sources == 0) throw Error(Errc::OutOfRange, "no sources");
  InterleaveSchedule s;
  for (std::size_t i = 0; i < sources; ++i)
    s.cycle_.push_back(static_cast<std::uint32_t>(i));
  return s;
}

InterleaveSchedule InterleaveSchedule::eventually_periodic(
    std::vector<std::uint32_t> head, std::vector<std::uint32_t> cycle) {
  if (cycle.empty()) throw Error(Errc::OutOfRange, "empty schedule cycle");
  InterleaveSchedule s;
  s.head_ = std::move(head);
  s.cycle_ = std::move(cycle);
  return s;
}

std::uint32_t InterleaveSchedule::source(std::uint64_t position) const {
  if (position < head_.size()) return head_[position];
  return cycle_[(position - head_.size()) % cycle_.size()];
}

std::uint32_t InterleaveSchedule::max_source() const {
  std::uint32_t m = 0;
  for (std::uint32_t s : head_) m = std::max(m, s);
  for (std::uint32_t s : cycle_) m = std::max(m, s);
  return m;
}

std::vector<std::uint32_t> InterleaveSchedule::recurring_sources() const {
  std::vector<std::uint32_t> out = cycle_;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ------------------------------------------------------------------ streams

struct BlockStream::Node {
  Kind kind;
  // Basis
  IndexSet set;
  // Pattern / Concat prefix
  BlockSeq shape{Field(2)};
  std::uint32_t shift = 0;
  // Concat / Tail / Sparse inner
  std::shared_ptr<const Node> inner;
  Field inner_field{2};
  std::size_t drop = 0;
  // Interleave
  std::vector<BlockStream> sources;
  InterleaveSchedule schedule = InterleaveSchedule::round_robin(1);
  // Sparse
  IntervalSeq intervals;
};

namespace {

Vec node_block(const BlockStream::Node& node, const Field& field, std::size_t n);

BlockSeq node_prefix(const BlockStream::Node& node, const Field& field,
                     std::size_t n) {
  std::vector<Vec> blocks;
  blocks.reserve(n);
  if (node.kind == BlockStream::Kind::Interleave) {
    // Positions depend on their predecessors; build iteratively with one
    // monotone cursor per source.
    std::vector<std::size_t> cursor(node.sources.size(), 0);
    std::optional<std::uint32_t> prev_max;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t s = node.schedule.source(i);
      const BlockStream& src = node.sources[s];
      Vec candidate = src.block(cursor[s]);
      while (prev_max && candidate.min_support() <= *prev_max) {
        ++cursor[s];
        candidate = src.block(cursor[s]);
      }
      ++cursor[s];
      prev_max = candidate.max_support();
      blocks.push_back(std::move(candidate));
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) blocks.push_back(node_block(node, field, i));
  }
  return BlockSeq::validate(std::move(blocks), field);
}

Vec node_block(const BlockStream::Node& node, const Field& field, std::size_t n) {
  switch (node.kind) {
    case BlockStream::Kind::Basis:
      return Vec::basis(static_cast<std::uint32_t>(node.set.nth(n)), field);
    case BlockStream::Kind::Pattern: {
      std::size_t len = node.shape.size();
      std::size_t rep = n / len, j = n % len;
      return node.shape[j].shifted(static_cast<std::uint32_t>(rep * node.shift));
    }
    case BlockStream::Kind::Concat:
      if (n < node.shape.size()) return node.shape[n];
      return node_block(*node.inner, field, n - node.shape.size());
    case BlockStream::Kind::Tail:
      return node_block(*node.inner, field, n + node.drop);
    case BlockStream::Kind::Interleave:
      return node_prefix(node, field, n + 1)[n];
    case BlockStream::Kind::Sparse: {
      auto idx = BlockStream::sparse_indices(node.intervals, n + 1);
      return node_block(*node.inner, field, idx[n]);
    }
  }
  throw Error(Errc::GeneratorExhausted, "unreachable");
}

}  // namespace

BlockStream BlockStream::basis(IndexSet set, Field field) {
  if (!set.infinite())
    throw Error(Errc::GeneratorExhausted, "basis stream requires an infinite index set");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Basis;
  node->set = std::move(set);
  return BlockStream(std::move(node), field);
}

BlockStream BlockStream::pattern(BlockSeq shape, std::uint32_t shift) {
  if (shape.empty()) throw Error(Errc::OutOfRange, "empty pattern");
  // Consecutive repetitions must stay block-ordered.
  if (shape.max_support() >= shape[0].min_support() + shift)
    throw Error(Errc::NotBlockOrdered,
                "shift " + std::to_string(shift) +
                    " too small for the pattern's support span");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Pattern;
  Field field = shape.field();
  node->shape = std::move(shape);
  node->shift = shift;
  return BlockStream(std::move(node), field);
}

BlockStream BlockStream::concat(BlockSeq prefix, BlockStream rest) {
  require_same_field(prefix.field(), rest.field());
  std::size_t drop = depth_index(rest, prefix);
  auto node = std::make_shared<Node>();
  node->kind = Kind::Concat;
  Field field = prefix.field();
  node->shape = std::move(prefix);
  node->inner = tail_of(rest, drop).node_;
  return BlockStream(std::move(node), field);
}

BlockStream BlockStream::tail_of(BlockStream inner, std::size_t drop) {
  if (drop == 0) return inner;
  auto node = std::make_shared<Node>();
  node->kind = Kind::Tail;
  node->inner = inner.node_;
  node->drop = drop;
  return BlockStream(std::move(node), inner.field_);
}

BlockStream BlockStream::interleave(std::vector<BlockStream> sources,
                                    InterleaveSchedule schedule) {
  if (sources.empty()) throw Error(Errc::OutOfRange, "no sources");
  for (const BlockStream& s : sources) require_same_field(s.field(), sources[0].field());
  if (schedule.max_source() >= sources.size())
    throw Error(Errc::OutOfRange, "schedule names a missing source");
  // Infinite-to-one: every source must recur in the periodic part.
  if (schedule.recurring_sources().size() != sources.size())
    throw Error(Errc::OutOfRange, "schedule gives some source a finite preimage");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Interleave;
  Field field = sources[0].field();
  node->sources = std::move(sources);
  node->schedule = std::move(schedule);
  return BlockStream(std::move(node), field);
}

BlockStream BlockStream::sparse(BlockStream inner, IntervalSeq intervals) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Sparse;
  node->inner = inner.node_;
  node->intervals = std::move(intervals);
  return BlockStream(std::move(node), inner.field_);
}

std::vector<std::uint64_t> BlockStream::sparse_indices(const IntervalSeq& intervals,
                                                       std::size_t count) {
  std::vector<std::uint64_t> out;
  out.reserve(count);
  std::uint64_t cur = 0;
  std::uint64_t m = 0;
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(cur);
    while (intervals.interval(m).first <= cur) ++m;
    cur = intervals.interval(m).second + 1;
  }
  return out;
}

Vec BlockStream::block(std::size_t n) const { return node_block(*node_, field_, n); }

BlockSeq BlockStream::prefix(std::size_t n) const {
  return node_prefix(*node_, field_, n);
}

IndexSet BlockStream::support_superset() const {
  switch (node_->kind) {
    case Kind::Basis:
      return node_->set;
    case Kind::Pattern: {
      std::vector<IndexSet> parts;
      for (const Vec& v : node_->shape)
        for (const auto& [index, coeff] : v.entries())
          parts.push_back(IndexSet::ap(index, node_->shift));
      return IndexSet::union_of(parts);
    }
    case Kind::Concat: {
      std::vector<std::uint64_t> fixed;
      for (const Vec& v : node_->shape)
        for (const auto& [index, coeff] : v.entries()) fixed.push_back(index);
      std::vector<IndexSet> parts{IndexSet::finite(std::move(fixed)),
                                  BlockStream(node_->inner, field_).support_superset()};
      return IndexSet::union_of(parts);
    }
    case Kind::Tail:
    case Kind::Sparse:
      return BlockStream(node_->inner, field_).support_superset();
    case Kind::Interleave: {
      std::vector<IndexSet> parts;
      for (const BlockStream& s : node_->sources) parts.push_back(s.support_superset());
      return IndexSet::union_of(parts);
    }
  }
  return IndexSet::all();
}

BlockStream::Kind BlockStream::kind() const { return node_->kind; }
const IndexSet& BlockStream::basis_set() const { return node_->set; }
const BlockSeq& BlockStream::pattern_shape() const { return node_->shape; }
std::uint32_t BlockStream::pattern_shift() const { return node_->shift; }
const BlockSeq& BlockStream::concat_prefix() const { return node_->shape; }
BlockStream BlockStream::concat_rest() const {
  return BlockStream(node_->inner, field_);
}
BlockStream BlockStream::tail_inner() const {
  return BlockStream(node_->inner, field_);
}
std::size_t BlockStream::tail_drop() const { return node_->drop; }
const std::vector<BlockStream>& BlockStream::sources() const {
  return node_->sources;
}

std::size_t depth_index(const BlockStream& A, const BlockSeq& a) {
  if (a.empty()) return 0;
  std::uint32_t bound = a.max_support();
  // Supports increase strictly, so min supp(block(n)) >= n: bounded scan.
  for (std::size_t n = 0;; ++n)
    if (A.block(n).min_support() > bound) return n;
}

BlockStream concat(const BlockSeq& a, const BlockStream& A) {
  return BlockStream::concat(a, A);
}

}  // namespace blockspace
