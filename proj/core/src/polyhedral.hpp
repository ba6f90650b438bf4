#pragma once

// Exact polyhedral machinery over Q for rank <= 3: Fourier-Motzkin
// feasibility with strict inequalities, cone H-representations, and the
// "is this polyhedron covered by a union of cones" decision used for fan
// completeness, support convexity and star-shapedness.

#include <optional>
#include <span>
#include <vector>

#include "bigint.hpp"
#include "toricmot/lattice.hpp"

namespace toricmot::detail {

enum class Rel { Ge, Gt, Eq };

/// coeffs . x + constant  (rel)  0
struct Constraint {
  std::vector<BigInt> coeffs;
  BigInt constant;
  Rel rel;
};

using System = std::vector<Constraint>;

Constraint homogeneous(const LatticeVector& normal, Rel rel);
/// normal . (x - shift) rel 0
Constraint shifted(const LatticeVector& normal, const LatticeVector& shift, Rel rel);

bool feasible(System sys, std::size_t dim);

/// Inequality description of a pointed cone: { x : <m, x> >= 0 for m in
/// inequalities, <l, x> = 0 for l in equalities }.
struct ConeHRep {
  std::vector<LatticeVector> inequalities;
  std::vector<LatticeVector> equalities;
};

/// Exact cone membership by Farkas: p is in cone(gens) iff no m has
/// <m, g> >= 0 on all generators and <m, p> < 0.
bool in_cone(const LatticeVector& p, std::span<const LatticeVector> gens);

/// True iff some m is strictly positive on every generator.
bool is_pointed(std::span<const LatticeVector> gens);

/// H-representation of a pointed cone, built from its dual.
ConeHRep cone_hrep(std::span<const LatticeVector> gens);

/// Facets of a full-dimensional pointed cone in rank 3 as pairs of local
/// generator indices (each facet of a cone with extreme generators holds
/// exactly two of them).
std::vector<std::pair<std::size_t, std::size_t>> facet_pairs_3d(std::span<const LatticeVector> gens);

System hrep_system(const ConeHRep& cone, const std::optional<LatticeVector>& shift = std::nullopt);

/// Decide region subset-of union(cones). All regions live in Q^dim.
bool region_covered(const System& region, std::span<const ConeHRep> cones, std::size_t dim);

}  // namespace toricmot::detail
