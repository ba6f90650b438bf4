#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toricmot/lattice.hpp"

namespace toricmot {

/// A cone of a fan, given by indices into the fan's ray table. The indices
/// are kept sorted and distinct.
struct Cone {
  std::vector<std::size_t> rays;

  Cone() = default;
  explicit Cone(std::vector<std::size_t> indices);
  Cone(std::initializer_list<std::size_t> indices) : Cone(std::vector<std::size_t>(indices)) {}

  std::size_t size() const noexcept { return rays.size(); }
  bool contains_ray(std::size_t i) const;
  /// Every ray of this cone is a ray of `other`.
  bool subset_of(const Cone& other) const;

  friend bool operator==(const Cone&, const Cone&) = default;
  friend auto operator<=>(const Cone&, const Cone&) = default;
};

/// Rays plus maximal cones in rank 2 or 3. The constructor checks only the
/// structure (lengths, indices); geometric conditions are checked by
/// validate_fan().
class Fan {
 public:
  Fan(std::size_t rank, std::vector<LatticeVector> rays, std::vector<Cone> max_cones);

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<LatticeVector>& rays() const noexcept { return rays_; }
  const LatticeVector& ray(std::size_t i) const { return rays_.at(i); }
  const std::vector<Cone>& max_cones() const noexcept { return max_cones_; }

  std::vector<LatticeVector> generators(const Cone& c) const;

  /// Apply x -> g x to every ray (g is rank x rank).
  Fan transformed(const IntegerMatrix& g) const;

  /// "Cone((0,1),(2,-1))"
  std::string describe(const Cone& c) const;

 private:
  std::size_t rank_;
  std::vector<LatticeVector> rays_;
  std::vector<Cone> max_cones_;
};

struct FanProfile {
  /// d[i] = number of i-dimensional cones; d[0] = 1 counts the zero cone.
  std::vector<std::size_t> d;
  std::size_t span_dim = 0;
  bool is_complete = false;
  /// gcd of the 2x2 determinants of ray generators; set iff rank = span = 2.
  std::optional<Int> index_m;

  bool degenerate(std::size_t rank) const { return span_dim < rank; }
  friend bool operator==(const FanProfile&, const FanProfile&) = default;
};

/// Full geometric validation. Throws ToricError naming the offending ray or
/// cone (EmptyFan, NonPrimitiveRay, DuplicateRay, NotStronglyConvex,
/// RayNotExtreme, NotMaximal, BadFaceIntersection, UnusedRay).
FanProfile validate_fan(const Fan& f);

/// Dimension of the linear span of a cone.
std::size_t cone_dimension(const Fan& f, const Cone& c);

/// All nonzero faces of all maximal cones, deduplicated, ordered by
/// dimension and then by ray indices.
std::vector<Cone> enumerate_faces(const Fan& f);

/// Proper nonzero faces of one cone of the fan.
std::vector<Cone> proper_faces(const Fan& f, const Cone& c);

/// Lattice index of a two-dimensional cone: |det| of its generators in
/// rank 2, gcd of the 2x2 minors in rank 3. Throws WrongDimension otherwise.
Int cone_multiplicity(const Fan& f, const Cone& c);

/// Generators extend to a lattice basis (all Smith invariant factors 1).
bool is_smooth_cone(const Fan& f, const Cone& c);
bool is_smooth(const Fan& f);

/// Singular faces (dim >= 2) whose proper faces are all smooth.
std::vector<Cone> minimal_singular_cones(const Fan& f);

/// Assumes f passes validate_fan.
bool is_complete(const Fan& f);
bool support_is_convex(const Fan& f);
bool support_contains(const Fan& f, const LatticeVector& p);

/// gcd of all 2x2 determinants of ray generators (rank 2). Throws
/// DegenerateIndex when every determinant vanishes.
Int fan_index(const Fan& f);

/// Dual of a strongly convex cone given by generators: extreme rays of the
/// pointed part (primitive, sorted) and, when the cone is not
/// full-dimensional, a lattice basis of the lineality space.
struct DualCone {
  std::vector<LatticeVector> rays;
  std::vector<LatticeVector> lineality;
};

DualCone dual_cone(std::span<const LatticeVector> generators);

}  // namespace toricmot
