#include "blockspace/field.hpp"

namespace blockspace {

Field::Field(unsigned q) : q_(q) {
  if (q != 2 && q != 3 && q != 5 && q != 7)
    throw Error(Errc::CoefficientOutOfRange,
                "field modulus must be a prime in {2,3,5,7}, got " + std::to_string(q));
}

std::uint8_t Field::inv(std::uint8_t a) const {
  if (a % q_ == 0) throw Error(Errc::CoefficientOutOfRange, "no inverse of 0");
  for (unsigned b = 1; b < q_; ++b)
    if ((a * b) % q_ == 1) return static_cast<std::uint8_t>(b);
  return 0;  // unreachable for prime q
}

void require_same_field(const Field& a, const Field& b) {
  if (a != b)
    throw Error(Errc::FieldMismatch, "operands over different fields (q=" +
                                         std::to_string(a.q()) + " vs q=" +
                                         std::to_string(b.q()) + ")");
}

}  // namespace blockspace
