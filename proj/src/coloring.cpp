#include "blockspace/coloring.hpp"

#include <bit>

namespace blockspace {

std::uint32_t mask_of(const Vec& v) {
  if (v.field().q() != 2)
    throw Error(Errc::FieldMismatch, "mask representation requires q = 2");
  std::uint32_t mask = 0;
  for (const auto& [index, coeff] : v.entries()) {
    if (index >= 31) throw Error(Errc::TooLarge, "mask window exceeded");
    mask |= std::uint32_t{1} << index;
  }
  return mask;
}

Vec vec_of_mask(std::uint32_t mask, const Field& field) {
  std::vector<Vec::Entry> entries;
  for (std::uint32_t i = 0; mask >> i; ++i)
    if ((mask >> i) & 1) entries.emplace_back(i, 1);
  return Vec::make(std::move(entries), field);
}

Coloring::Coloring(unsigned window, std::vector<std::uint8_t> bits)
    : window_(window), bits_(std::move(bits)) {
  if (window == 0 || window > 24)
    throw Error(Errc::TooLarge, "coloring window must be in [1, 24]");
  if (bits_.size() != (std::size_t{1} << window) - 1)
    throw Error(Errc::OutOfRange,
                "coloring must assign exactly 2^window - 1 colors, got " +
                    std::to_string(bits_.size()));
  for (std::uint8_t b : bits_)
    if (b > 1) throw Error(Errc::OutOfRange, "colors are 0 or 1");
}

Coloring Coloring::support_parity(unsigned window) {
  std::vector<std::uint8_t> bits((std::size_t{1} << window) - 1);
  for (std::uint32_t mask = 1; mask - 1 < bits.size(); ++mask)
    bits[mask - 1] = static_cast<std::uint8_t>(std::popcount(mask) % 2);
  return Coloring(window, std::move(bits));
}

Coloring Coloring::leading_index_parity(unsigned window) {
  std::vector<std::uint8_t> bits((std::size_t{1} << window) - 1);
  for (std::uint32_t mask = 1; mask - 1 < bits.size(); ++mask)
    bits[mask - 1] = static_cast<std::uint8_t>((31 - std::countl_zero(mask)) % 2);
  return Coloring(window, std::move(bits));
}

Coloring Coloring::builtin(const std::string& name, unsigned window) {
  if (name == "support-parity") return support_parity(window);
  if (name == "leading-parity") return leading_index_parity(window);
  throw Error(Errc::BadExpr, "unknown builtin coloring: " + name);
}

}  // namespace blockspace
