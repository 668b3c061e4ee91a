#include "blockspace/construct.hpp"

#include <algorithm>

#include "blockspace/almost_disjoint.hpp"

namespace blockspace {

namespace {

constexpr std::uint32_t kWindowCap = 1u << 14;

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::size_t ceil_log(unsigned q, std::uint64_t n) {
  std::size_t e = 0;
  std::uint64_t p = 1;
  while (p < n) {
    p *= q;
    ++e;
  }
  return e;
}

}  // namespace

std::size_t min_window_dim(unsigned q, std::uint64_t n) {
  if (n < 1) throw Error(Errc::OutOfRange, "count must be >= 1");
  // q^M > n * q^(ceil(M/2))  <=>  q^(floor(M/2)) > n.
  for (std::size_t m = 1;; ++m) {
    std::uint64_t p = 1;
    bool big = false;
    for (std::size_t i = 0; i < m / 2; ++i) {
      p *= q;
      if (p > n) {
        big = true;
        break;
      }
    }
    if (big || p > n) return m;
  }
}

SubspaceFamily SubspaceFamily::valuation(Field field, std::uint64_t base) {
  SubspaceFamily f(field);
  f.infinite_ = true;
  f.base_ = base;
  return f;
}

SubspaceFamily SubspaceFamily::decorated(Field field, std::uint64_t base,
                                         std::uint64_t seed) {
  SubspaceFamily f(field);
  f.infinite_ = true;
  f.base_ = base;
  f.seed_ = seed;
  f.decorate_ = true;
  return f;
}

SubspaceFamily SubspaceFamily::finite_family(std::vector<BlockStream> members) {
  if (members.empty()) throw Error(Errc::OutOfRange, "empty family");
  SubspaceFamily f(members[0].field());
  f.members_ = std::move(members);
  return f;
}

BlockStream SubspaceFamily::member(std::size_t n) const {
  if (!infinite_) {
    if (n >= members_.size())
      throw Error(Errc::OutOfRange, "family member " + std::to_string(n));
    return members_[n];
  }
  BlockStream base = BlockStream::basis(
      IndexSet::valuation_class(base_, static_cast<unsigned>(n)), field_);
  if (!decorate_) return base;
  switch (mix(seed_ ^ n) % 3) {
    case 1:
      return BlockStream::tail_of(base, 1 + mix(seed_ ^ (n * 131)) % 2);
    case 2:
      return BlockStream::sparse(base, IntervalSeq::singletons());
    default:
      return base;
  }
}

bool SubspaceFamily::certify(std::size_t count, std::size_t horizon) const {
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j) {
      auto verdict = bounded_almost_disjoint(member(i), member(j), horizon);
      if (!std::holds_alternative<DisjointAt>(verdict)) return false;
    }
  return true;
}

std::vector<Vec> window_blocks(const BlockStream& s, std::uint32_t window) {
  std::vector<Vec> out;
  for (std::size_t n = 0;; ++n) {
    Vec b = s.block(n);
    if (b.max_support() >= window) break;
    out.push_back(std::move(b));
  }
  return out;
}

bool visit_span_ascending(std::span<const Vec> blocks, const Field& field,
                          const std::function<bool(const Vec&)>& visitor) {
  // Blocks have separated supports, so the element with the larger top
  // coefficient wins every canonical comparison: a mixed-radix odometer
  // from the top block enumerates the span in exact canonical order.
  std::vector<std::vector<Vec>> scaled(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (unsigned c = 1; c < field.q(); ++c)
      scaled[i].push_back(blocks[i].scaled(static_cast<std::uint8_t>(c)));
    std::sort(scaled[i].begin(), scaled[i].end(), canonical_less);
  }
  auto rec = [&](auto&& self, long i, const Vec& acc) -> bool {
    if (i < 0) return !acc.is_zero() && visitor(acc);
    if (self(self, i - 1, acc)) return true;
    for (const Vec& sv : scaled[i])
      if (self(self, i - 1, acc.add(sv))) return true;
    return false;
  };
  return rec(rec, static_cast<long>(blocks.size()) - 1, Vec::zero(field));
}

namespace {

/// True when q^d certainly exceeds the union bound over the obstruction
/// dimensions (count many subspaces, max dimension dmax).
bool provably_nonempty(unsigned q, std::size_t d, std::size_t dmax,
                       std::size_t count) {
  if (count == 0) return d >= 1;
  return d > dmax + ceil_log(q, count + 1);
}

}  // namespace

Vec avoid_step(const SubspaceFamily& family, std::span<const Vec> chosen,
               std::size_t n, std::uint32_t window) {
  const Field& field = family.field();
  for (std::uint32_t w = std::max<std::uint32_t>(window, 2); w <= kWindowCap; w *= 2) {
    std::vector<Vec> v_blocks = window_blocks(family.member(n), w);
    if (v_blocks.empty()) continue;
    std::vector<Subspace> obstructions;
    std::size_t dmax = 0;
    Subspace v_slice = Subspace::span_of(v_blocks, field, w);
    bool ok = true;
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Vec> rows = window_blocks(family.member(k), w);
      rows.insert(rows.end(), chosen.begin(), chosen.end());
      Subspace u_k = Subspace::span_of(rows, field, w);
      std::size_t cut = Subspace::intersect(v_slice, u_k).dim();
      dmax = std::max(dmax, cut);
      obstructions.push_back(std::move(u_k));
      if (cut >= v_slice.dim()) ok = false;  // slice swallowed; must grow
    }
    if (!ok || !provably_nonempty(field.q(), v_slice.dim(), dmax, n)) continue;
    Vec found = Vec::zero(field);
    bool hit = visit_span_ascending(v_blocks, field, [&](const Vec& x) {
      for (const Subspace& u : obstructions)
        if (u.contains(x)) return false;
      found = x;
      return true;
    });
    if (hit) return found;
  }
  throw Error(Errc::WindowExhausted,
              "avoidance window cap reached; family precondition violated");
}

std::vector<Vec> avoid_construct(const SubspaceFamily& family, std::size_t steps,
                                 std::uint32_t window) {
  if (!family.infinite())
    throw Error(Errc::OutOfRange,
                "avoid_construct requires an indexed infinite family");
  if (steps > 0 && !family.certify(steps, 16))
    throw Error(Errc::OutOfRange, "family is not certified pairwise almost disjoint");
  const Field& field = family.field();
  std::vector<Vec> chosen;
  for (std::size_t n = 0; n < steps; ++n) {
    chosen.push_back(avoid_step(family, chosen, n, window));
    // Per-step contract: span{x_i : i <= n} ∩ V_k-slice ⊆ span{x_i : i <= k}.
    std::uint32_t w = chosen.back().max_support() + 1;
    for (const Vec& v : chosen) w = std::max(w, v.max_support() + 1);
    Subspace all = Subspace::span_of(chosen, field, w);
    for (std::size_t k = 0; k < n; ++k) {
      Subspace v_slice = Subspace::span_of(window_blocks(family.member(k), w), field, w);
      Subspace early = Subspace::span_of(
          std::span<const Vec>(chosen.data(), k + 1), field, w);
      for (const Vec& x : all.enumerate())
        if (v_slice.contains(x) && !early.contains(x))
          throw Error(Errc::WindowExhausted, "avoidance invariant failed at step " +
                                                 std::to_string(n));
    }
  }
  return chosen;
}

std::vector<Vec> trivial_avoid_construct(const SubspaceFamily& family,
                                         std::size_t steps,
                                         std::uint32_t window) {
  if (family.infinite() || family.finite_size() < 2)
    throw Error(Errc::OutOfRange,
                "trivial_avoid_construct requires a finite family of size >= 2");
  std::size_t count = family.finite_size();
  if (!family.certify(count, 16))
    throw Error(Errc::OutOfRange, "family is not certified pairwise almost disjoint");
  const Field& field = family.field();
  unsigned q = field.q();
  std::vector<Vec> chosen;

  auto decode = [&](std::uint64_t code) {
    std::vector<Vec::Entry> entries;
    for (std::uint32_t i = 0; code != 0; ++i, code /= q)
      if (std::uint8_t digit = static_cast<std::uint8_t>(code % q); digit != 0)
        entries.emplace_back(i, digit);
    return Vec::make(std::move(entries), field);
  };

  for (std::size_t m = 0; m < steps; ++m) {
    std::uint32_t w = std::max<std::uint32_t>(
        window, static_cast<std::uint32_t>(min_window_dim(q, count)));
    bool placed = false;
    for (; w <= kWindowCap && !placed; w *= 2) {
      std::vector<Subspace> obstructions;
      std::size_t dmax = 0;
      for (std::size_t k = 0; k < count; ++k) {
        std::vector<Vec> rows = window_blocks(family.member(k), w);
        rows.insert(rows.end(), chosen.begin(), chosen.end());
        Subspace u_k = Subspace::span_of(rows, field, w);
        dmax = std::max(dmax, u_k.dim());
        obstructions.push_back(std::move(u_k));
      }
      if (!provably_nonempty(q, w, dmax, count)) continue;
      std::uint64_t limit = 1;
      for (std::uint32_t i = 0; i < w && limit < (1ull << 22) / q; ++i) limit *= q;
      for (std::uint64_t code = 1; code < limit; ++code) {
        Vec x = decode(code);
        bool inside = false;
        for (const Subspace& u : obstructions)
          if (u.contains(x)) {
            inside = true;
            break;
          }
        if (!inside) {
          chosen.push_back(std::move(x));
          placed = true;
          break;
        }
      }
    }
    if (!placed)
      throw Error(Errc::WindowExhausted, "no avoiding vector below the window cap");
    // Per-step contract: span(chosen) ∩ V_k-slice = {0}.
    std::uint32_t w_check = 1;
    for (const Vec& v : chosen) w_check = std::max(w_check, v.max_support() + 1);
    Subspace all = Subspace::span_of(chosen, field, w_check);
    for (std::size_t k = 0; k < count; ++k) {
      Subspace v_slice = Subspace::span_of(
          window_blocks(family.member(k), w_check), field, w_check);
      for (const Vec& x : all.enumerate())
        if (!x.is_zero() && v_slice.contains(x))
          throw Error(Errc::WindowExhausted,
                      "trivial avoidance invariant failed at step " +
                          std::to_string(m));
    }
  }
  return chosen;
}

BlockStream interleave_build(std::vector<BlockStream> sources,
                             InterleaveSchedule schedule) {
  return BlockStream::interleave(std::move(sources), std::move(schedule));
}

BlockStream sparse_subsequence(BlockStream stream, IntervalSeq intervals) {
  return BlockStream::sparse(std::move(stream), std::move(intervals));
}

std::vector<std::optional<std::size_t>> weak_diag_check(
    const BlockStream& B, std::span<const BlockStream> chain,
    std::size_t horizon) {
  // The chain must be <=-decreasing within the horizon.
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!block_leq(chain[i + 1].prefix(horizon), chain[i].prefix(horizon)))
      throw Error(Errc::NotAReduction,
                  "chain is not decreasing at index " + std::to_string(i + 1));
  BlockSeq b_prefix = B.prefix(horizon);
  std::vector<std::optional<std::size_t>> out;
  for (const BlockStream& a : chain) {
    Subspace span_a = Subspace::span_of(a.prefix(horizon));
    std::size_t last_bad = 0;
    bool any_bad = false;
    for (std::size_t j = 0; j < horizon; ++j)
      if (!span_a.contains(b_prefix[j])) {
        any_bad = true;
        last_bad = j;
      }
    if (!any_bad)
      out.emplace_back(0);
    else if (last_bad + 1 < horizon)
      out.emplace_back(last_bad + 1);
    else
      out.emplace_back(std::nullopt);  // nothing verified beyond the horizon
  }
  return out;
}

DiagVerdict diagonalize_check(const BlockStream& B, const BlockStream& A,
                              std::span<const BlockStream> chain,
                              std::size_t horizon) {
  if (!chain.empty() && !block_leq(chain[0].prefix(horizon), A.prefix(horizon)))
    throw Error(Errc::NotAReduction, "chain does not start below A");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!block_leq(chain[i + 1].prefix(horizon), chain[i].prefix(horizon)))
      throw Error(Errc::NotAReduction,
                  "chain is not decreasing at index " + std::to_string(i + 1));
  BlockSeq b_prefix = B.prefix(horizon);
  bool unknown = false;
  for (std::size_t n = 0; n <= horizon; ++n) {
    std::size_t d = depth_index(A, B.prefix(std::min(n, b_prefix.size())));
    if (d >= chain.size())
      throw Error(Errc::IndexBeyondChain,
                  "depth " + std::to_string(d) + " exceeds chain length " +
                      std::to_string(chain.size()));
    const BlockStream& target = chain[d];
    BlockSeq target_prefix = target.prefix(horizon);
    Subspace span_t = Subspace::span_of(target_prefix);
    for (std::size_t j = n; j < horizon; ++j) {
      if (span_t.contains(b_prefix[j])) continue;
      // No longer prefix can absorb the block once the target's next block
      // clears the block's top support index.
      if (horizon > 0 &&
          target.block(horizon).min_support() > b_prefix[j].max_support())
        return DiagVerdict::Fails;
      unknown = true;
    }
  }
  return unknown ? DiagVerdict::Unknown : DiagVerdict::Holds;
}

}  // namespace blockspace
