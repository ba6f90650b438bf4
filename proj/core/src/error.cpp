#include "toricmot/error.hpp"

namespace toricmot {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::BadParameters: return "BadParameters";
    case Errc::Overflow: return "Overflow";
    case Errc::NonPrimitiveRay: return "NonPrimitiveRay";
    case Errc::DuplicateRay: return "DuplicateRay";
    case Errc::BadConeIndex: return "BadConeIndex";
    case Errc::RayNotExtreme: return "RayNotExtreme";
    case Errc::NotStronglyConvex: return "NotStronglyConvex";
    case Errc::NotMaximal: return "NotMaximal";
    case Errc::BadFaceIntersection: return "BadFaceIntersection";
    case Errc::UnusedRay: return "UnusedRay";
    case Errc::EmptyFan: return "EmptyFan";
    case Errc::WrongDimension: return "WrongDimension";
    case Errc::DegenerateIndex: return "DegenerateIndex";
    case Errc::UnboundedLineality: return "UnboundedLineality";
    case Errc::UnsupportedSingularStratum: return "UnsupportedSingularStratum";
    case Errc::NegativeRank: return "NegativeRank";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::NonCellularInput: return "NonCellularInput";
    case Errc::CellularityNotCertified: return "CellularityNotCertified";
    case Errc::BadBranchCount: return "BadBranchCount";
    case Errc::ParseError: return "ParseError";
    case Errc::NotARefinement: return "NotARefinement";
  }
  return "Unknown";
}

ToricError::ToricError(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

HypothesisViolated::HypothesisViolated(int index)
    : ToricError(Errc::HypothesisViolated,
                 "H_" + std::to_string(2 * index) + " has torsion and H_" +
                     std::to_string(2 * index + 1) + " is nonzero (i = " +
                     std::to_string(index) + ")"),
      index_(index) {}

}  // namespace toricmot
