#include "blockspace/hindman.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

namespace blockspace {

namespace {

int min_bit(std::uint32_t mask) { return std::countr_zero(mask); }
int max_bit(std::uint32_t mask) { return 31 - std::countl_zero(mask); }

/// Depth-first search for the least witness with a fixed first block.
/// `span` holds the nonzero span of the chosen blocks; every new block must
/// keep the whole span on `color`.
bool extend_witness(const Coloring& coloring, unsigned k,
                    std::vector<std::uint32_t>& blocks,
                    std::vector<std::uint32_t>& span, std::uint8_t color) {
  if (blocks.size() == k) return true;
  std::uint32_t limit = std::uint32_t{1} << coloring.window();
  for (std::uint32_t y = std::uint32_t{1} << (max_bit(blocks.back()) + 1); y < limit;
       ++y) {
    if (min_bit(y) <= max_bit(blocks.back())) continue;
    if (coloring.color(y) != color) continue;
    bool clean = true;
    for (std::uint32_t s : span)
      if (coloring.color(s ^ y) != color) {
        clean = false;
        break;
      }
    if (!clean) continue;
    std::size_t old = span.size();
    span.push_back(y);
    for (std::size_t i = 0; i < old; ++i) span.push_back(span[i] ^ y);
    blocks.push_back(y);
    if (extend_witness(coloring, k, blocks, span, color)) return true;
    blocks.pop_back();
    span.resize(old);
  }
  return false;
}

std::optional<HindmanWitness> search_from(const Coloring& coloring, unsigned k,
                                          std::uint32_t first) {
  std::vector<std::uint32_t> blocks{first};
  std::vector<std::uint32_t> span{first};
  std::uint8_t color = coloring.color(first);
  if (extend_witness(coloring, k, blocks, span, color))
    return HindmanWitness{std::move(blocks), color};
  return std::nullopt;
}

}  // namespace

std::optional<HindmanWitness> hindman_search(const Coloring& coloring, unsigned k,
                                             unsigned jobs) {
  if (k == 0) throw Error(Errc::OutOfRange, "witness length must be >= 1");
  std::uint32_t limit = (std::uint32_t{1} << coloring.window()) - 1;
  if (jobs <= 1) {
    for (std::uint32_t first = 1; first <= limit; ++first)
      if (auto w = search_from(coloring, k, first)) return w;
    return std::nullopt;
  }
  // Workers own first blocks round-robin; the least successful first block
  // wins, which is exactly the sequential answer.
  std::vector<std::optional<HindmanWitness>> results(limit + 1);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < jobs; ++w)
    pool.emplace_back([&, w]() {
      for (std::uint32_t first = 1 + w; first <= limit; first += jobs)
        results[first] = search_from(coloring, k, first);
    });
  for (auto& t : pool) t.join();
  for (std::uint32_t first = 1; first <= limit; ++first)
    if (results[first]) return results[first];
  return std::nullopt;
}

namespace {

/// Not-all-equal constraints: the nonzero span of every block-ordered
/// k-tuple within the window.
std::vector<std::vector<std::uint32_t>> witness_constraints(unsigned window,
                                                            unsigned k) {
  std::vector<std::vector<std::uint32_t>> out;
  std::uint32_t limit = std::uint32_t{1} << window;
  std::vector<std::uint32_t> blocks, span;
  auto rec = [&](auto&& self, int lo) -> void {
    if (blocks.size() == k) {
      std::vector<std::uint32_t> c = span;
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
      return;
    }
    for (std::uint32_t y = std::uint32_t{1} << lo; y < limit; ++y) {
      if (min_bit(y) < lo) continue;
      std::size_t old = span.size();
      span.push_back(y);
      for (std::size_t i = 0; i < old; ++i) span.push_back(span[i] ^ y);
      blocks.push_back(y);
      self(self, max_bit(y) + 1);
      blocks.pop_back();
      span.resize(old);
    }
  };
  rec(rec, 0);
  return out;
}

struct NaeSolver {
  std::vector<std::vector<std::uint32_t>> constraints;
  std::vector<std::vector<std::uint32_t>> by_var;  // mask -> constraint ids
  std::vector<int> color;                          // mask -> -1/0/1
  std::uint32_t nvars;

  explicit NaeSolver(unsigned window, unsigned k)
      : constraints(witness_constraints(window, k)),
        nvars((std::uint32_t{1} << window) - 1) {
    by_var.resize(nvars + 1);
    color.assign(nvars + 1, -1);
    for (std::uint32_t ci = 0; ci < constraints.size(); ++ci)
      for (std::uint32_t m : constraints[ci]) by_var[m].push_back(ci);
  }

  /// Assign and propagate; forced assignments are appended to the trail.
  /// Returns false on a monochromatic constraint.
  bool assign(std::uint32_t var, int value, std::vector<std::uint32_t>& trail) {
    color[var] = value;
    trail.push_back(var);
    std::vector<std::uint32_t> queue{var};
    while (!queue.empty()) {
      std::uint32_t v = queue.back();
      queue.pop_back();
      for (std::uint32_t ci : by_var[v]) {
        int assigned_color = -2;  // -2 none, -3 mixed
        std::uint32_t free_var = 0;
        unsigned free_count = 0;
        for (std::uint32_t m : constraints[ci]) {
          if (color[m] < 0) {
            free_var = m;
            ++free_count;
            if (free_count > 1) break;
          } else if (assigned_color == -2) {
            assigned_color = color[m];
          } else if (assigned_color >= 0 && color[m] != assigned_color) {
            assigned_color = -3;
            break;
          }
        }
        if (assigned_color == -3 || free_count > 1) continue;
        if (free_count == 0) {
          if (assigned_color >= 0) return false;  // monochromatic
          continue;
        }
        int forced = 1 - assigned_color;
        if (assigned_color < 0) continue;
        if (color[free_var] < 0) {
          color[free_var] = forced;
          trail.push_back(free_var);
          queue.push_back(free_var);
        }
      }
    }
    return true;
  }

  void undo(std::vector<std::uint32_t>& trail, std::size_t mark) {
    while (trail.size() > mark) {
      color[trail.back()] = -1;
      trail.pop_back();
    }
  }

  bool solve(std::uint32_t var, std::vector<std::uint32_t>& trail) {
    while (var <= nvars && color[var] >= 0) ++var;
    if (var > nvars) return true;
    for (int value : {0, 1}) {
      std::size_t mark = trail.size();
      if (assign(var, value, trail) && solve(var + 1, trail)) return true;
      undo(trail, mark);
    }
    return false;
  }
};

bool avoiding_exists_sequential(unsigned window, unsigned k) {
  NaeSolver solver(window, k);
  std::vector<std::uint32_t> trail;
  // Complement symmetry: pin the first vector's color.
  if (!solver.assign(1, 0, trail)) return false;
  return solver.solve(2, trail);
}

}  // namespace

bool avoiding_coloring_exists(unsigned window, unsigned k, unsigned jobs) {
  if (k == 0) throw Error(Errc::OutOfRange, "witness length must be >= 1");
  if (jobs <= 1) return avoiding_exists_sequential(window, k);
  // Branch on the first few free variables; any satisfiable branch wins.
  unsigned depth = 0;
  while ((1u << depth) < jobs && depth + 2 < window) ++depth;
  std::atomic<bool> found{false};
  std::vector<std::thread> pool;
  for (unsigned branch = 0; branch < (1u << depth); ++branch)
    pool.emplace_back([&, branch]() {
      NaeSolver solver(window, k);
      std::vector<std::uint32_t> trail;
      if (!solver.assign(1, 0, trail)) return;
      bool viable = true;
      for (unsigned i = 0; i < depth && viable; ++i) {
        std::uint32_t var = 2 + i;
        if (solver.color[var] >= 0) {
          if (solver.color[var] != static_cast<int>((branch >> i) & 1)) viable = false;
          continue;
        }
        viable = solver.assign(var, (branch >> i) & 1, trail);
      }
      if (viable && solver.solve(2, trail)) found.store(true);
    });
  for (auto& t : pool) t.join();
  return found.load();
}

WindowScan min_hindman_window(unsigned k, unsigned cap, unsigned jobs) {
  if (k == 0 || k > 3) throw Error(Errc::OutOfRange, "witness length must be in [1, 3]");
  WindowScan scan;
  scan.cap = cap;
  for (unsigned window = 1; window <= cap; ++window) {
    bool forced;
    if (window < k) {
      forced = false;  // no length-k block tuple fits at all
    } else {
      forced = !avoiding_coloring_exists(window, k, jobs);
    }
    scan.entries.push_back({window, forced});
    if (forced && !scan.found) {
      scan.found = window;
      break;
    }
  }
  return scan;
}

}  // namespace blockspace
