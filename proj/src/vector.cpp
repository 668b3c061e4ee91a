#include "blockspace/vector.hpp"

#include <algorithm>

namespace blockspace {

Vec Vec::make(std::vector<Entry> pairs, Field field) {
  std::sort(pairs.begin(), pairs.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  Vec v(field);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [index, coeff] = pairs[i];
    if (coeff == 0 || coeff >= field.q())
      throw Error(Errc::CoefficientOutOfRange,
                  "coefficient " + std::to_string(coeff) + " at index " +
                      std::to_string(index) + " outside [1, " +
                      std::to_string(field.q()) + ")",
                  i);
    if (i > 0 && pairs[i - 1].first == index)
      throw Error(Errc::DuplicateIndex,
                  "duplicate index " + std::to_string(index), i);
    v.entries_.emplace_back(index, coeff);
  }
  return v;
}

Vec Vec::basis(std::uint32_t index, Field field) {
  return make({{index, 1}}, field);
}

std::uint8_t Vec::coeff(std::uint32_t k) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), k,
      [](const Entry& e, std::uint32_t key) { return e.first < key; });
  if (it != entries_.end() && it->first == k) return it->second;
  return 0;
}

std::uint32_t Vec::min_support() const {
  if (entries_.empty()) throw Error(Errc::ZeroVector, "zero vector has no support");
  return entries_.front().first;
}

std::uint32_t Vec::max_support() const {
  if (entries_.empty()) throw Error(Errc::ZeroVector, "zero vector has no support");
  return entries_.back().first;
}

Vec Vec::add(const Vec& other) const {
  require_same_field(field_, other.field_);
  Vec out(field_);
  auto a = entries_.begin(), b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      out.entries_.push_back(*b++);
    } else {
      std::uint8_t c = field_.add(a->second, b->second);
      if (c != 0) out.entries_.emplace_back(a->first, c);
      ++a, ++b;
    }
  }
  return out;
}

Vec Vec::scaled(std::uint8_t scalar) const {
  Vec out(field_);
  scalar = static_cast<std::uint8_t>(scalar % field_.q());
  if (scalar == 0) return out;
  for (const auto& [index, coeff] : entries_)
    out.entries_.emplace_back(index, field_.mul(coeff, scalar));
  return out;
}

Vec Vec::shifted(std::uint32_t offset) const {
  Vec out(field_);
  for (const auto& [index, coeff] : entries_)
    out.entries_.emplace_back(index + offset, coeff);
  return out;
}

int Vec::canonical_cmp(const Vec& a, const Vec& b) {
  // Highest index with differing coefficient decides.
  auto ia = a.entries_.rbegin(), ib = b.entries_.rbegin();
  while (ia != a.entries_.rend() && ib != b.entries_.rend()) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    ++ia, ++ib;
  }
  if (ia != a.entries_.rend()) return 1;
  if (ib != b.entries_.rend()) return -1;
  return 0;
}

bool block_lt(const Vec& x, const Vec& y) {
  return x.max_support() < y.min_support();
}

}  // namespace blockspace
