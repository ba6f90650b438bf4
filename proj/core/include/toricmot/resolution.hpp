#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "toricmot/fan.hpp"
#include "toricmot/lattice.hpp"

namespace toricmot {

class Motive;

/// Exceptional locus of a 2D toric resolution: one chain of projective
/// lines per singular cone.
struct ExceptionalModel {
  std::size_t num_components = 0;
  Int total_lines = 0;
  std::vector<Int> chain_lengths;

  friend bool operator==(const ExceptionalModel&, const ExceptionalModel&) = default;
};

struct ResolutionResult {
  Fan refined_fan;
  std::vector<LatticeVector> added_rays;
  /// Singular maximal cone of the input fan -> number of rays inserted.
  std::map<Cone, std::size_t> per_cone_chains;

  ExceptionalModel exceptional_model() const;
};

/// Rays of the Hirzebruch-Jung subdivision of Cone(u1, u2), ordered from u1
/// to u2. Empty iff the cone is smooth. Throws WrongDimension if u1, u2 are
/// not linearly independent rank-2 vectors.
std::vector<LatticeVector> resolve_cone_2d(const LatticeVector& u1, const LatticeVector& u2);
std::vector<LatticeVector> resolve_cone_2d(const Fan& f, const Cone& c);

/// (d, k) with an SL2/GL2 change of basis taking the generators to (0,1)
/// and (d,-k), 0 <= k < d.
std::pair<Int, Int> cone_type_2d(const LatticeVector& u1, const LatticeVector& u2);

/// Minimal smooth refinement of a rank-2 fan. Added rays are appended after
/// the original rays; each singular cone is replaced by its subcones.
ResolutionResult resolve_fan_2d(const Fan& f);

/// Z^t + Z{1}^k
Motive exceptional_motive(const ExceptionalModel& e);

}  // namespace toricmot
