#pragma once

#include <cstdint>

#include "blockspace/error.hpp"

namespace blockspace {

/// Prime field F_q with q in {2, 3, 5, 7}. Scalars are uint8_t in [0, q).
class Field {
 public:
  explicit Field(unsigned q = 2);

  unsigned q() const { return q_; }

  std::uint8_t add(std::uint8_t a, std::uint8_t b) const {
    return static_cast<std::uint8_t>((a + b) % q_);
  }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const {
    return static_cast<std::uint8_t>((a + q_ - b) % q_);
  }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const {
    return static_cast<std::uint8_t>((a * b) % q_);
  }
  std::uint8_t neg(std::uint8_t a) const {
    return static_cast<std::uint8_t>((q_ - a) % q_);
  }
  std::uint8_t inv(std::uint8_t a) const;

  friend bool operator==(const Field& a, const Field& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.q_ != b.q_; }

 private:
  unsigned q_;
};

/// Throws FieldMismatch unless both operands live over the same field.
void require_same_field(const Field& a, const Field& b);

}  // namespace blockspace
