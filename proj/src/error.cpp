#include "genlouvain/error.hpp"

namespace genlouvain {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroEdgeMass: return "zero edge mass";
    case Errc::DegenerateComplement: return "degenerate complement";
    case Errc::InvalidAlpha: return "invalid alpha";
    case Errc::InvalidPrecision: return "invalid precision";
    case Errc::UnknownCriterion: return "unknown criterion";
    case Errc::NotPluggable: return "not pluggable";
    case Errc::WeightedInputNotSupported: return "weighted input not supported";
    case Errc::NodeNotInCommunity: return "node not in community";
    case Errc::NodeAlreadyPlaced: return "node already placed";
    case Errc::UnknownCommunity: return "unknown community";
    case Errc::SweepCapExceeded: return "sweep cap exceeded";
    case Errc::TooLarge: return "too large";
    case Errc::ParseError: return "parse error";
    case Errc::NegativeWeight: return "negative weight";
    case Errc::UnknownLabel: return "unknown label";
    case Errc::CoverageMismatch: return "coverage mismatch";
    case Errc::EmptyGraph: return "empty graph";
  }
  return "unknown error";
}

}  // namespace genlouvain
