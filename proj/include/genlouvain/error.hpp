#pragma once

#include <stdexcept>
#include <string>

namespace genlouvain {

enum class Errc {
  ZeroEdgeMass,
  DegenerateComplement,
  InvalidAlpha,
  InvalidPrecision,
  UnknownCriterion,
  NotPluggable,
  WeightedInputNotSupported,
  NodeNotInCommunity,
  NodeAlreadyPlaced,
  UnknownCommunity,
  SweepCapExceeded,
  TooLarge,
  ParseError,
  NegativeWeight,
  UnknownLabel,
  CoverageMismatch,
  EmptyGraph,
};

const char* to_string(Errc code) noexcept;

/// Single exception type for the library; `code()` distinguishes failure kinds.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace genlouvain
