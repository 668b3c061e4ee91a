#pragma once

#include <functional>
#include <string>
#include <vector>

#include "blockspace/block_seq.hpp"

namespace blockspace {

struct AxiomsOptions {
  unsigned jobs = 1;
  /// Mutation-testing hook: replaces the finite-approximation order inside
  /// the A2 checks. Leave empty for the real one.
  std::function<bool(const BlockSeq&, const BlockSeq&)> le_fin_override;
};

struct AxiomsReport {
  std::size_t trials = 0;
  std::uint64_t seed = 0;

  struct Finding {
    std::size_t trial;
    std::string axiom;
    std::string detail;
  };
  /// (axiom label, number of instances checked), in fixed report order.
  std::vector<std::pair<std::string, std::size_t>> checks;
  std::vector<Finding> findings;

  std::size_t a4_checks = 0;
  std::size_t a4_successes = 0;

  std::string to_text() const;
};

/// Randomized suite over generated streams and sequences (window <= 10,
/// q = 2) exercising A1, A2(2), A2(3), A3(1), A3(2) and the pigeonhole A4
/// at the recorded window scale. Output is a pure function of
/// (trials, seed); workers only partition the trial range.
AxiomsReport axioms_check(std::size_t trials, std::uint64_t seed,
                          AxiomsOptions options = {});

}  // namespace blockspace
