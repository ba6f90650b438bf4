#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toricmot {

enum class Errc {
  ZeroVector,
  RankMismatch,
  BadParameters,
  Overflow,
  NonPrimitiveRay,
  DuplicateRay,
  BadConeIndex,
  RayNotExtreme,
  NotStronglyConvex,
  NotMaximal,
  BadFaceIntersection,
  UnusedRay,
  EmptyFan,
  WrongDimension,
  DegenerateIndex,
  UnboundedLineality,
  UnsupportedSingularStratum,
  NegativeRank,
  HypothesisViolated,
  NonCellularInput,
  CellularityNotCertified,
  BadBranchCount,
  ParseError,
  NotARefinement,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class ToricError : public std::runtime_error {
 public:
  ToricError(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Raised by assemble_motive when H_{2i} has torsion and H_{2i+1} != 0.
class HypothesisViolated : public ToricError {
 public:
  explicit HypothesisViolated(int index);

  /// The i of the failing pair (H_{2i}, H_{2i+1}).
  int index() const noexcept { return index_; }

 private:
  int index_;
};

}  // namespace toricmot
