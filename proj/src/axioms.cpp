#include "blockspace/axioms.hpp"

#include <sstream>
#include <thread>

#include "blockspace/generators.hpp"
#include "blockspace/hindman.hpp"
#include "blockspace/intersection.hpp"
#include "blockspace/ramsey.hpp"
#include "blockspace/textio.hpp"

namespace blockspace {

namespace {

constexpr std::size_t kHorizon = 10;

struct TrialResult {
  std::vector<std::pair<std::string, std::string>> failures;  // axiom, detail
  std::size_t a4_checks = 0;
  std::size_t a4_successes = 0;
};

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  SplitMix64 rng(a ^ (b * 0x9e3779b97f4a7c15ull));
  return rng.next();
}

std::string show(const BlockSeq& seq) {
  std::string out = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += "; ";
    out += print_vector(seq[i]);
  }
  return out + ")";
}

void check_a1(SplitMix64& rng, const Field& field, TrialResult& result) {
  BlockStream a = random_stream(rng, field, 2);
  if (!a.prefix(0).empty())
    result.failures.emplace_back("A1(1)", "r_0 not empty");
  // Prefixes of a common stream agree below their length; unequal lengths
  // are unequal approximations.
  std::size_t n = 1 + rng.below(5), m = 1 + rng.below(5);
  BlockSeq rn = a.prefix(n), rm = a.prefix(m);
  if ((rn == rm) != (n == m))
    result.failures.emplace_back("A1(3)",
                                 "prefix equality disagrees with length equality");
  for (std::size_t k = 0; k < std::min(n, m); ++k)
    if (rn.prefix(k) != rm.prefix(k))
      result.failures.emplace_back("A1(3)", "prefixes diverge below a common prefix");
  // Distinct streams separate at a finite approximation.
  BlockStream b = BlockStream::tail_of(a, 1);
  bool separated = false;
  for (std::size_t i = 1; i <= kHorizon && !separated; ++i)
    if (a.prefix(i) != b.prefix(i)) separated = true;
  if (!separated)
    result.failures.emplace_back("A1(2)", "tail stream not separated from parent");
}

void check_a2_2(SplitMix64& rng, const Field& field,
                const std::function<bool(const BlockSeq&, const BlockSeq&)>& lefin,
                TrialResult& result) {
  BlockStream b = random_stream(rng, field, 2);
  BlockSeq b_prefix = b.prefix(kHorizon);
  BlockSeq candidate = rng.chance(1, 2) ? random_reduction(rng, b_prefix, 6)
                                        : random_block_seq(rng, field, 10, 4);
  bool direct = block_leq(candidate, b_prefix);
  bool via_lefin = true;
  for (std::size_t n = 1; n <= candidate.size() && via_lefin; ++n) {
    bool some = false;
    for (std::size_t m = 0; m <= b_prefix.size() && !some; ++m)
      if (lefin(candidate.prefix(n), b_prefix.prefix(m))) some = true;
    via_lefin = some;
  }
  if (direct != via_lefin)
    result.failures.emplace_back(
        "A2(2)", "<= and forall-exists <=_fin disagree on " + show(candidate));
}

void check_a2_3(SplitMix64& rng, const Field& field,
                const std::function<bool(const BlockSeq&, const BlockSeq&)>& lefin,
                TrialResult& result) {
  BlockStream stream = random_stream(rng, field, 2);
  BlockSeq c = stream.prefix(kHorizon);
  BlockSeq b = random_reduction(rng, c, 6);
  if (b.empty()) return;
  BlockSeq a = b.prefix(rng.below(b.size() + 1));
  // a ⊑ b and b <=_fin c: some initial segment of c must absorb a.
  bool found = false;
  for (std::size_t n = 0; n <= c.size() && !found; ++n)
    if (lefin(a, c.prefix(n))) found = true;
  if (!found)
    result.failures.emplace_back("A2(3)", "no initial segment of " + show(c) +
                                              " absorbs " + show(a));
}

void check_a3_1(SplitMix64& rng, const Field& field, TrialResult& result) {
  BlockStream stream = random_stream(rng, field, 2);
  BlockSeq b_prefix = stream.prefix(kHorizon);
  BlockSeq a = random_reduction(rng, b_prefix.prefix(1 + rng.below(5)), 4);
  DepthResult d = depth(stream, a, kHorizon);
  if (!d.is_finite()) {
    result.failures.emplace_back("A3(1)", "depth of a constructed reduction is not finite");
    return;
  }
  // Witness for [a, B] != {}: a followed by the far-enough tail of B.
  BlockStream witness = concat(a, stream);
  if (witness.prefix(a.size()) != a)
    result.failures.emplace_back("A3(1)", "concat witness does not extend a");
  if (!block_leq(witness.prefix(kHorizon), stream.prefix(3 * kHorizon)))
    result.failures.emplace_back("A3(1)", "concat witness escapes the stream");
}

void check_a3_2(SplitMix64& rng, const Field& field, TrialResult& result) {
  BlockStream stream = random_stream(rng, field, 2);
  BlockSeq b_full = stream.prefix(2 * kHorizon);
  BlockSeq reduction = random_reduction(rng, b_full, 8);
  if (reduction.size() < 2) return;
  BlockSeq a = reduction.prefix(1 + rng.below(2));
  DepthResult dr = depth(stream, a, 2 * kHorizon);
  if (!dr.is_finite()) {
    result.failures.emplace_back("A3(2)", "depth not finite for nested reduction");
    return;
  }
  std::size_t d = *dr.finite;
  // Least cut M past which the reduction expands only in blocks >= d.
  std::size_t m = reduction.size();
  for (std::size_t j = reduction.size(); j-- > 0;) {
    auto coords = expand_in(b_full, reduction[j]);
    if (!coords) {
      result.failures.emplace_back("A3(2)", "reduction block outside the stream");
      return;
    }
    std::size_t lowest = coords->size();
    for (std::size_t i = 0; i < coords->size(); ++i)
      if ((*coords)[i] != 0) {
        lowest = i;
        break;
      }
    if (lowest >= d)
      m = j;
    else
      break;
  }
  // C := r_d(B) followed by the deep tail of the reduction.
  BlockSeq c = concat(b_full.prefix(d), reduction.tail(m));
  if (c.prefix(d) != b_full.prefix(d)) {
    result.failures.emplace_back("A3(2)", "C does not begin with r_d(B)");
    return;
  }
  if (!block_leq(c, b_full))
    result.failures.emplace_back("A3(2)", "C is not a reduction of B");
  if (!le_fin(a, c.prefix(d)))
    result.failures.emplace_back("A3(2)", "[a, C] is empty");
  // [a, C] ⊆ [a, reduction]: everything of C above a stays inside the
  // reduction's span, and a itself lies there.
  if (!block_leq(c.tail(d), reduction))
    result.failures.emplace_back("A3(2)", "tail of C escapes the reduction");
  if (!le_fin(a, reduction))
    result.failures.emplace_back("A3(2)", "a escapes the reduction");
}

void check_a4(SplitMix64& rng, const Field& field, TrialResult& result) {
  // A block context a plus a tail spanning kPairPigeonholeWindow fresh
  // dimensions; a random coloring of the one-extensions must admit a
  // homogeneous block pair by the recorded finite pigeonhole.
  constexpr unsigned kTail = kPairPigeonholeWindow;
  BlockSeq a = random_block_seq(rng, field, 4, 2);
  std::uint32_t base = a.empty() ? 0 : a.max_support() + 1;
  std::vector<Vec> tail_blocks;
  for (unsigned i = 0; i < kTail; ++i) {
    std::uint32_t lo = base + 2 * i;
    tail_blocks.push_back(random_vector_in(rng, field, lo, lo + 1));
  }
  BlockSeq tail = BlockSeq::validate(tail_blocks, field);

  std::vector<std::uint8_t> bits((1u << kTail) - 1);
  for (auto& bit : bits) bit = static_cast<std::uint8_t>(rng.below(2));
  Coloring coloring(kTail, bits);

  ++result.a4_checks;
  auto witness = hindman_search(coloring, 2);
  if (!witness) {
    result.failures.emplace_back("A4", "no homogeneous pair for a random coloring");
    return;
  }
  // Soundness of the reduction: expand the witness masks through the tail
  // blocks and re-check homogeneity of all one-extensions of a.
  auto expand = [&](std::uint32_t mask) {
    Vec v = Vec::zero(field);
    for (unsigned i = 0; i < kTail; ++i)
      if ((mask >> i) & 1) v = v.add(tail[i]);
    return v;
  };
  Vec x = expand(witness->blocks[0]), y = expand(witness->blocks[1]);
  BlockSeq extended = concat(a, BlockSeq::validate({x, y}, field));
  if (extended.size() != a.size() + 2) {
    result.failures.emplace_back("A4", "homogeneous reduction does not extend a");
    return;
  }
  std::uint32_t m0 = witness->blocks[0], m1 = witness->blocks[1];
  for (std::uint32_t mask : {m0, m1, m0 ^ m1})
    if (coloring.color(mask) != witness->color) {
      result.failures.emplace_back("A4", "witness span is not monochromatic");
      return;
    }
  ++result.a4_successes;
}

TrialResult run_trial(std::size_t trial, std::uint64_t seed,
                      const AxiomsOptions& options) {
  SplitMix64 rng(mix(seed, trial));
  Field field(2);
  std::function<bool(const BlockSeq&, const BlockSeq&)> lefin =
      options.le_fin_override;
  if (!lefin) lefin = [](const BlockSeq& a, const BlockSeq& b) { return le_fin(a, b); };
  TrialResult result;
  check_a1(rng, field, result);
  check_a2_2(rng, field, lefin, result);
  check_a2_3(rng, field, lefin, result);
  check_a3_1(rng, field, result);
  check_a3_2(rng, field, result);
  check_a4(rng, field, result);
  return result;
}

}  // namespace

AxiomsReport axioms_check(std::size_t trials, std::uint64_t seed,
                          AxiomsOptions options) {
  AxiomsReport report;
  report.trials = trials;
  report.seed = seed;

  std::vector<TrialResult> results(trials);
  unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1 || trials < 2) {
    for (std::size_t t = 0; t < trials; ++t) results[t] = run_trial(t, seed, options);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w)
      pool.emplace_back([&, w]() {
        for (std::size_t t = w; t < trials; t += jobs)
          results[t] = run_trial(t, seed, options);
      });
    for (auto& t : pool) t.join();
  }

  const char* labels[] = {"A1", "A2(2)", "A2(3)", "A3(1)", "A3(2)", "A4"};
  for (const char* label : labels) report.checks.emplace_back(label, trials);
  for (std::size_t t = 0; t < trials; ++t) {
    for (const auto& [axiom, detail] : results[t].failures)
      report.findings.push_back({t, axiom, detail});
    report.a4_checks += results[t].a4_checks;
    report.a4_successes += results[t].a4_successes;
  }
  return report;
}

std::string AxiomsReport::to_text() const {
  std::ostringstream out;
  out << "axioms-check trials=" << trials << " seed=" << seed << "\n";
  for (const auto& [axiom, count] : checks) {
    std::size_t bad = 0;
    for (const auto& finding : findings)
      if (finding.axiom.rfind(axiom, 0) == 0) ++bad;
    out << axiom << " checks=" << count << " counterexamples=" << bad << "\n";
  }
  out << "A4 homogeneous " << a4_successes << "/" << a4_checks << "\n";
  for (const auto& finding : findings)
    out << "counterexample trial=" << finding.trial << " axiom=" << finding.axiom
        << ": " << finding.detail << "\n";
  out << "total-counterexamples " << findings.size() << "\n";
  return out.str();
}

}  // namespace blockspace
