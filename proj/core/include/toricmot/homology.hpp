#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "toricmot/fan.hpp"
#include "toricmot/lattice.hpp"

namespace toricmot {

/// Z^free_rank + Z/t1 + ... + Z/tk with t1 | t2 | ... and every ti >= 2.
class FGAbelianGroup {
 public:
  FGAbelianGroup() = default;

  /// Reduces the torsion to invariant-factor form and drops trivial factors.
  /// Divisors must be positive; throws BadParameters otherwise.
  static FGAbelianGroup normalize(Int free_rank, std::span<const Int> divisors);
  static FGAbelianGroup free(Int rank) { return normalize(rank, {}); }
  static FGAbelianGroup cyclic(Int order);

  Int free_rank() const noexcept { return free_rank_; }
  const std::vector<Int>& torsion() const noexcept { return torsion_; }

  bool is_zero() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
  bool is_free() const noexcept { return torsion_.empty(); }

  FGAbelianGroup direct_sum(const FGAbelianGroup& other) const;

  /// "Z^2 + Z/2", "0"
  std::string to_string() const;

  friend bool operator==(const FGAbelianGroup&, const FGAbelianGroup&) = default;

 private:
  Int free_rank_ = 0;
  std::vector<Int> torsion_;
};

/// normalize_group from the module contract.
inline FGAbelianGroup normalize_group(Int free_rank, std::span<const Int> divisors) {
  return FGAbelianGroup::normalize(free_rank, divisors);
}

/// Homology indexed by degree; zero groups are never stored.
class GradedGroups {
 public:
  explicit GradedGroups(int top_degree = 0);

  int top_degree() const noexcept { return top_degree_; }
  /// Zero group when absent.
  FGAbelianGroup at(int degree) const;
  /// Stores g in `degree`; storing a zero group erases the entry. Throws
  /// BadParameters for degrees outside [0, top_degree].
  void set(int degree, FGAbelianGroup g);

  const std::map<int, FGAbelianGroup>& by_degree() const noexcept { return by_degree_; }
  bool only_even_free() const;

  /// "H0=Z H2=Z^2 + Z/2 H4=Z"
  std::string to_string() const;

  friend bool operator==(const GradedGroups&, const GradedGroups&) = default;

 private:
  std::map<int, FGAbelianGroup> by_degree_;
  int top_degree_;
};

/// Closed-form Borel-Moore homology of a rank-2 toric surface from its fan
/// profile. For degenerate profiles (span < 2) the torsion term is trivial.
/// Throws NegativeRank if a rank formula goes negative.
GradedGroups surface_bm_homology(const FanProfile& p);

/// Cellular variety with a[i] cells of dimension i: H_{2i} = Z^{a[i]}.
GradedGroups cellular_bm_homology(std::span<const Int> cell_counts);

struct ExceptionalModel;

/// Disjoint union of chains of projective lines: H0 = Z^components,
/// H2 = Z^lines.
GradedGroups tree_exceptional_homology(const ExceptionalModel& e);

/// Homology of a rational projective curve from the branch counts of its
/// singular points, computed from the normalization sequence
/// 0 -> H1(C) -> H0(E) -> H0(Z) + H0(P^1) -> H0(C) -> 0.
GradedGroups curve_homology(std::span<const Int> branch_counts);

}  // namespace toricmot
