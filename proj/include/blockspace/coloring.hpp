#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blockspace/vector.hpp"

namespace blockspace {

/// F_2 vectors inside span{e_0..e_{N-1}} as bit masks (bit i = coefficient
/// of e_i); the mask value is also the canonical integer code.
std::uint32_t mask_of(const Vec& v);
Vec vec_of_mask(std::uint32_t mask, const Field& field);

/// Total 2-coloring of the nonzero vectors of span{e_0..e_{window-1}} over
/// F_2, stored as a packed array in canonical vector order.
class Coloring {
 public:
  Coloring(unsigned window, std::vector<std::uint8_t> bits);

  static Coloring support_parity(unsigned window);
  static Coloring leading_index_parity(unsigned window);
  static Coloring builtin(const std::string& name, unsigned window);

  unsigned window() const { return window_; }
  std::uint8_t color(std::uint32_t mask) const { return bits_[mask - 1]; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

 private:
  unsigned window_;
  std::vector<std::uint8_t> bits_;  // index mask-1, values 0/1
};

}  // namespace blockspace
