#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toricmot/error.hpp"
#include "toricmot/homology.hpp"

namespace toricmot {

/// A{twist}[shift] with A = group, shift in {0, 1}.
struct MotiveSummand {
  FGAbelianGroup group;
  int twist = 0;
  int shift = 0;

  friend bool operator==(const MotiveSummand&, const MotiveSummand&) = default;
};

/// Finite direct sum of summands in canonical form: sorted by (twist,
/// shift), one entry per slot, no zero groups.
class Motive {
 public:
  Motive() = default;
  explicit Motive(std::vector<MotiveSummand> summands);

  const std::vector<MotiveSummand>& summands() const noexcept { return summands_; }
  bool is_zero() const noexcept { return summands_.empty(); }

  Motive direct_sum(const Motive& other) const;

  /// Canonical text, e.g. "Z + Z^2{1} + Z/2{1} + Z{1}[1] + Z{2}".
  std::string to_string() const;
  /// Inverse of to_string(); throws ParseError.
  static Motive parse(const std::string& text);

  friend bool operator==(const Motive&, const Motive&) = default;

 private:
  std::vector<MotiveSummand> summands_;
};

/// Direct-sum formula: sum_i H_{2i}{i} + H_{2i+1}{i}[1]. Requires, for
/// every i <= top_degree/2, that H_{2i} is free or H_{2i+1} = 0; throws
/// HypothesisViolated(i) otherwise.
Motive assemble_motive(const GradedGroups& h);

/// Index of the first degree pair violating the direct-sum hypothesis.
std::optional<int> first_hypothesis_violation(const GradedGroups& h);

/// sum_i Z^{a_i}{i}
Motive cellular_motive(std::span<const Int> cell_counts);

/// Z + Z^{sum b - n}[1] + Z{1} for a rational curve with n singular points
/// having b_1, ..., b_n branches. Throws BadBranchCount if some b < 1.
Motive curve_motive(std::span<const Int> branch_counts);

/// No shifts and no torsion.
bool is_pure_tate(const Motive& m);

/// The cofiber presentation  E-part -> (Z + X~)-part  of a cellular
/// resolution square. The map itself is not determined combinatorially;
/// the report records only the two pure Tate objects and the rank
/// constraints they force on the cofiber.
struct CofiberReport {
  Motive source;  // sum_i H_{2i}(E){i}
  Motive target;  // sum_i (H_{2i}(Z) + H_{2i}(X~)){i}
  struct TwistConstraint {
    int twist;
    Int source_rank;
    Int target_rank;
    /// rank H_{2i}(X) - rank H_{2i+1}(X) = target_rank - source_rank
    Int euler_defect;
    Int max_map_rank;
  };
  std::vector<TwistConstraint> constraints;
  std::string status = "presented-not-resolved";
};

/// Throws NonCellularInput if any input has odd or torsion homology.
CofiberReport cofiber_diagnostic(const GradedGroups& e, const GradedGroups& z, const GradedGroups& xt);

}  // namespace toricmot
