#include "blockspace/subspace.hpp"

#include <algorithm>
#include <bit>

namespace blockspace {

namespace {

// Dense row engines for rank/kernel work. GF(2) rows pack into 64-bit
// words so elimination is word XOR; other moduli use byte arrays.

struct Gf2Mat {
  std::size_t cols = 0;
  std::vector<std::vector<std::uint64_t>> rows;

  static std::size_t words(std::size_t cols) { return (cols + 63) / 64; }
  void add_row() { rows.emplace_back(words(cols), 0); }
  void set(std::size_t r, std::size_t c, std::uint8_t v) {
    if (v) rows[r][c / 64] |= std::uint64_t{1} << (c % 64);
  }
  std::uint8_t get(std::size_t r, std::size_t c) const {
    return (rows[r][c / 64] >> (c % 64)) & 1;
  }
  long leading(std::size_t r) const {
    for (std::size_t w = 0; w < rows[r].size(); ++w)
      if (rows[r][w]) return static_cast<long>(w * 64 + std::countr_zero(rows[r][w]));
    return -1;
  }
  void axpy(std::size_t dst, std::size_t src, std::uint8_t factor) {
    if (!factor) return;
    for (std::size_t w = 0; w < rows[dst].size(); ++w) rows[dst][w] ^= rows[src][w];
  }
  void scale(std::size_t, std::uint8_t) {}
};

struct GfpMat {
  Field field{3};
  std::size_t cols = 0;
  std::vector<std::vector<std::uint8_t>> rows;

  void add_row() { rows.emplace_back(cols, 0); }
  void set(std::size_t r, std::size_t c, std::uint8_t v) { rows[r][c] = v; }
  std::uint8_t get(std::size_t r, std::size_t c) const { return rows[r][c]; }
  long leading(std::size_t r) const {
    for (std::size_t c = 0; c < cols; ++c)
      if (rows[r][c]) return static_cast<long>(c);
    return -1;
  }
  void axpy(std::size_t dst, std::size_t src, std::uint8_t factor) {
    if (!factor) return;
    for (std::size_t c = 0; c < cols; ++c)
      rows[dst][c] = field.add(rows[dst][c], field.mul(factor, rows[src][c]));
  }
  void scale(std::size_t r, std::uint8_t factor) {
    for (std::size_t c = 0; c < cols; ++c) rows[r][c] = field.mul(rows[r][c], factor);
  }
};

/// In-place reduced row echelon form; returns (pivot column per rank row).
template <class Mat>
std::vector<std::size_t> rref(Mat& m, const Field& field) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows.size(); ++col) {
    std::size_t pivot_row = rank;
    while (pivot_row < m.rows.size() && m.get(pivot_row, col) == 0) ++pivot_row;
    if (pivot_row == m.rows.size()) continue;
    std::swap(m.rows[rank], m.rows[pivot_row]);
    m.scale(rank, field.inv(m.get(rank, col)));
    for (std::size_t r = 0; r < m.rows.size(); ++r)
      if (r != rank && m.get(r, col) != 0)
        m.axpy(r, rank, field.neg(m.get(r, col)));
    pivots.push_back(col);
    ++rank;
  }
  m.rows.resize(rank);
  return pivots;
}

template <class Mat>
std::size_t rank_of(Mat m, const Field& field) {
  return rref(m, field).size();
}

/// Null space {x : M x = 0} of a matrix whose rows are equations.
template <class Mat>
std::vector<std::vector<std::uint8_t>> kernel(Mat m, const Field& field,
                                              std::size_t unknowns) {
  std::vector<std::size_t> pivots = rref(m, field);
  std::vector<bool> is_pivot(unknowns, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<std::uint8_t>> out;
  for (std::size_t free_col = 0; free_col < unknowns; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<std::uint8_t> x(unknowns, 0);
    x[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      x[pivots[r]] = field.neg(m.get(r, free_col));
    out.push_back(std::move(x));
  }
  return out;
}

template <class Mat>
Mat from_vectors(std::span<const Vec> vectors, const Field& field,
                 std::size_t cols) {
  Mat m;
  if constexpr (std::is_same_v<Mat, GfpMat>) m.field = field;
  m.cols = cols;
  for (const Vec& v : vectors) {
    m.add_row();
    for (const auto& [index, coeff] : v.entries())
      m.set(m.rows.size() - 1, index, coeff);
  }
  return m;
}

template <class Mat>
std::vector<Vec> to_vectors(const Mat& m, const Field& field) {
  std::vector<Vec> out;
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    std::vector<Vec::Entry> entries;
    for (std::size_t c = 0; c < m.cols; ++c)
      if (std::uint8_t v = m.get(r, c); v != 0)
        entries.emplace_back(static_cast<std::uint32_t>(c), v);
    if (!entries.empty()) out.push_back(Vec::make(std::move(entries), field));
  }
  return out;
}

std::vector<Vec> rref_vectors(std::span<const Vec> vectors, const Field& field,
                              std::size_t cols) {
  if (cols == 0) cols = 1;
  if (field.q() == 2) {
    Gf2Mat m = from_vectors<Gf2Mat>(vectors, field, cols);
    rref(m, field);
    return to_vectors(m, field);
  }
  GfpMat m = from_vectors<GfpMat>(vectors, field, cols);
  rref(m, field);
  return to_vectors(m, field);
}

std::size_t rank_of_vectors(std::span<const Vec> vectors, const Field& field,
                            std::size_t cols) {
  if (cols == 0) cols = 1;
  if (field.q() == 2) return rank_of(from_vectors<Gf2Mat>(vectors, field, cols), field);
  return rank_of(from_vectors<GfpMat>(vectors, field, cols), field);
}

std::uint32_t needed_window(std::span<const Vec> vectors, std::uint32_t window) {
  for (const Vec& v : vectors)
    if (!v.is_zero()) window = std::max(window, v.max_support() + 1);
  return window;
}

}  // namespace

Subspace Subspace::span_of(std::span<const Vec> vectors, Field field,
                           std::uint32_t window) {
  window = needed_window(vectors, window);
  Subspace s(field, window);
  s.rows_ = rref_vectors(vectors, field, window);
  return s;
}

Subspace Subspace::embedded(std::uint32_t window) const {
  Subspace s(field_, std::max(window, window_));
  s.rows_ = rows_;
  return s;
}

Vec Subspace::reduce(Vec v) const {
  require_same_field(v.field(), field_);
  for (const Vec& row : rows_) {
    if (v.is_zero()) break;
    std::uint8_t c = v.coeff(row.min_support());
    if (c != 0) v = v.add(row.scaled(field_.neg(c)));  // pivot coeff is 1
  }
  return v;
}

bool Subspace::contains_all(const Subspace& other) const {
  for (const Vec& row : other.rows_)
    if (!contains(row)) return false;
  return true;
}

std::vector<Vec> Subspace::enumerate(std::size_t cap) const {
  double size = 1;
  for (std::size_t i = 0; i < rows_.size(); ++i) size *= field_.q();
  if (size > static_cast<double>(cap))
    throw Error(Errc::TooLarge, "span enumeration of dimension " +
                                    std::to_string(rows_.size()) + " exceeds cap");
  std::vector<Vec> out;
  out.reserve(static_cast<std::size_t>(size));
  Vec acc = Vec::zero(field_);
  auto rec = [&](auto&& self, std::size_t i, const Vec& acc) -> void {
    if (i == rows_.size()) {
      out.push_back(acc);
      return;
    }
    for (unsigned c = 0; c < field_.q(); ++c)
      self(self, i + 1, c == 0 ? acc : acc.add(rows_[i].scaled(static_cast<std::uint8_t>(c))));
  };
  rec(rec, 0, acc);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Subspace Subspace::intersect(const Subspace& u, const Subspace& v) {
  require_same_field(u.field_, v.field_);
  std::uint32_t window = std::max(u.window_, v.window_);
  const Field& field = u.field_;
  std::size_t k = u.rows_.size(), l = v.rows_.size();
  if (k == 0 || l == 0) return Subspace(field, window);
  // Unknowns (alpha, beta); one equation per coordinate:
  //   sum_i alpha_i U_i[m] - sum_j beta_j V_j[m] = 0.
  auto solve = [&](auto mat) {
    mat.cols = k + l;
    for (std::uint32_t m = 0; m < window; ++m) {
      mat.add_row();
      std::size_t r = mat.rows.size() - 1;
      for (std::size_t i = 0; i < k; ++i) mat.set(r, i, u.rows_[i].coeff(m));
      for (std::size_t j = 0; j < l; ++j)
        mat.set(r, k + j, field.neg(v.rows_[j].coeff(m)));
    }
    return kernel(std::move(mat), field, k + l);
  };
  std::vector<std::vector<std::uint8_t>> null_basis;
  if (field.q() == 2)
    null_basis = solve(Gf2Mat{});
  else {
    GfpMat m;
    m.field = field;
    null_basis = solve(std::move(m));
  }
  std::vector<Vec> members;
  for (const auto& x : null_basis) {
    Vec w = Vec::zero(field);
    for (std::size_t i = 0; i < k; ++i)
      if (x[i]) w = w.add(u.rows_[i].scaled(x[i]));
    if (!w.is_zero()) members.push_back(std::move(w));
  }
  return span_of(members, field, window);
}

Subspace Subspace::sum(const Subspace& u, const Subspace& v) {
  require_same_field(u.field_, v.field_);
  std::vector<Vec> rows = u.rows_;
  rows.insert(rows.end(), v.rows_.begin(), v.rows_.end());
  return span_of(rows, u.field_, std::max(u.window_, v.window_));
}

Subspace Subspace::slice(std::uint32_t lo, std::uint32_t hi) const {
  // Solve for combinations with zero coordinates outside [lo, hi].
  if (rows_.empty()) return Subspace(field_, window_);
  std::size_t d = rows_.size();
  auto solve = [&](auto mat) {
    mat.cols = d;
    for (std::uint32_t m = 0; m < window_; ++m) {
      if (m >= lo && m <= hi) continue;
      mat.add_row();
      for (std::size_t i = 0; i < d; ++i)
        mat.set(mat.rows.size() - 1, i, rows_[i].coeff(m));
    }
    return kernel(std::move(mat), field_, d);
  };
  std::vector<std::vector<std::uint8_t>> null_basis;
  if (field_.q() == 2)
    null_basis = solve(Gf2Mat{});
  else {
    GfpMat m;
    m.field = field_;
    null_basis = solve(std::move(m));
  }
  std::vector<Vec> members;
  for (const auto& x : null_basis) {
    Vec w = Vec::zero(field_);
    for (std::size_t i = 0; i < d; ++i)
      if (x[i]) w = w.add(rows_[i].scaled(x[i]));
    if (!w.is_zero()) members.push_back(std::move(w));
  }
  return span_of(members, field_, window_);
}

std::vector<std::uint32_t> Subspace::split_points() const {
  std::vector<std::uint32_t> out;
  if (window_ == 0) return out;
  for (std::uint32_t k = 0; k < window_; ++k) {
    // dim(U ∩ lower) = dim U - rank(U projected beyond k), and dually.
    std::vector<Vec> upper_proj, lower_proj;
    for (const Vec& row : rows_) {
      std::vector<Vec::Entry> up, low;
      for (const auto& [index, coeff] : row.entries())
        (index <= k ? low : up).emplace_back(index, coeff);
      if (!up.empty()) upper_proj.push_back(Vec::make(std::move(up), field_));
      if (!low.empty()) lower_proj.push_back(Vec::make(std::move(low), field_));
    }
    std::size_t dim_lower = rows_.size() - rank_of_vectors(upper_proj, field_, window_);
    std::size_t dim_upper = rows_.size() - rank_of_vectors(lower_proj, field_, window_);
    if (dim_lower + dim_upper == rows_.size()) out.push_back(k);
  }
  return out;
}

std::optional<BlockSeq> Subspace::block_basis() const {
  if (rows_.empty()) return BlockSeq(field_);
  std::vector<std::uint32_t> splits = split_points();
  std::vector<Vec> picks;
  std::size_t total = 0;
  std::uint32_t lo = 0;
  for (std::uint32_t k : splits) {
    Subspace layer = slice(lo, k);
    lo = k + 1;
    if (layer.dim() == 0) continue;
    if (layer.dim() > 1) return std::nullopt;
    total += 1;
    // Canonical-least nonzero element of a one-dimensional layer.
    Vec best = layer.basis()[0];
    for (unsigned c = 2; c < field_.q(); ++c) {
      Vec candidate = layer.basis()[0].scaled(static_cast<std::uint8_t>(c));
      if (canonical_less(candidate, best)) best = candidate;
    }
    picks.push_back(std::move(best));
  }
  if (total != rows_.size()) return std::nullopt;
  return BlockSeq::validate(std::move(picks), field_);
}

bool block_leq(const BlockSeq& A, const BlockSeq& B) {
  Subspace span_b = Subspace::span_of(B);
  for (const Vec& v : A)
    if (!span_b.contains(v)) return false;
  return true;
}

}  // namespace blockspace
