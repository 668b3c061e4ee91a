#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blockspace {

enum class Errc {
  DuplicateIndex,
  CoefficientOutOfRange,
  FieldMismatch,
  ZeroVector,
  NotBlockOrdered,
  OutOfRange,
  NoSuchTail,
  GeneratorExhausted,
  TooLarge,
  WindowExhausted,
  NotAReduction,
  IndexBeyondChain,
  BadHeader,
  BadPair,
  BadExpr,
};

/// Library-wide error; `position` carries a vector index or a 1-based
/// line number, depending on the operation that threw.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::size_t position = 0)
      : std::runtime_error(what), code_(code), position_(position) {}

  Errc code() const { return code_; }
  std::size_t position() const { return position_; }

 private:
  Errc code_;
  std::size_t position_;
};

}  // namespace blockspace
