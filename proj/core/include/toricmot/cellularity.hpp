#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toricmot/fan.hpp"
#include "toricmot/lattice.hpp"

namespace toricmot {

/// |f| + u is contained in |f|, decided exactly.
bool star_shaped_test(const Fan& f, const LatticeVector& u);

/// Minimal generators of the semigroup cone(generators) ∩ Z^n, sorted.
/// The cone may be lower-dimensional but must be strongly convex; throws
/// UnboundedLineality otherwise.
std::vector<LatticeVector> hilbert_basis(std::span<const LatticeVector> generators);

/// Semigroup generators of the dual of cone(generators): Hilbert basis of
/// the pointed part together with +/- a basis of the lineality space.
std::vector<LatticeVector> dual_hilbert_basis(std::span<const LatticeVector> generators);

/// Union over maximal cones of dual_hilbert_basis, deduplicated and sorted.
std::vector<LatticeVector> regular_covectors(const Fan& f);

/// <m, u> != 0 for every covector m of regular_covectors(f).
bool is_regular(const Fan& f, const LatticeVector& u);

/// Both conditions: star-shaped around u and u regular.
bool verify_regular_vector(const Fan& f, const LatticeVector& u);

/// Default l-infinity bound for the search; the TORICMOT_SEARCH_BOUND
/// environment variable overrides it.
int default_search_bound();

struct RegularVectorSearch {
  std::optional<LatticeVector> u;
  /// Set when u is empty.
  std::string reason;
};

/// Enumerates nonzero u by increasing l-infinity norm up to `bound` and
/// returns the first one satisfying both conditions.
RegularVectorSearch regular_vector_search(const Fan& f, int bound = default_search_bound());

enum class CellularityStatus { Cellular, NotCertified, Obstructed };
enum class QuasiprojectiveSource { None, UserFlag, CompleteRank2, ConvexSupportPolyhedral, RefinementOfQuasiprojective };

std::string_view status_name(CellularityStatus s) noexcept;
std::string_view source_name(QuasiprojectiveSource s) noexcept;

struct CellularityOptions {
  /// Explicit answer from the user; overrides every automatic rule.
  std::optional<bool> quasiprojective;
  /// The fan refines a fan known to be quasiprojective.
  bool refines_quasiprojective = false;
  int search_bound = default_search_bound();
};

struct CellularityCertificate {
  CellularityStatus status = CellularityStatus::NotCertified;
  std::optional<LatticeVector> u;
  std::string reason;
  QuasiprojectiveSource quasiprojective_source = QuasiprojectiveSource::None;

  bool cellular() const noexcept { return status == CellularityStatus::Cellular; }
};

CellularityCertificate certify_cellular(const Fan& f, const CellularityOptions& options = {});

/// Torus-invariant curves through the singular locus of a rank-3 fan.
struct OrbitGraph {
  enum class VertexKind { FixedPoint, OpenEnd };
  struct Vertex {
    VertexKind kind;
    /// Maximal cone for fixed points, the singular face for open ends.
    Cone cone;
  };
  struct Edge {
    Cone face;
    std::size_t a;
    std::size_t b;
  };

  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::size_t component_count = 0;
  std::size_t first_betti = 0;

  std::size_t degree(std::size_t v) const;
  /// Fixed points lying on at least two singular curves.
  std::size_t junction_count() const;
  bool empty() const noexcept { return edges.empty(); }
};

/// Graph with one edge per given 2-face of a rank-3 fan.
OrbitGraph orbit_graph(const Fan& f, std::span<const Cone> faces);

/// One edge per minimal singular 2-face. A face contained in a single
/// maximal 3-cone (or none) gets an OpenEnd vertex for each missing fixed
/// point. Throws UnsupportedSingularStratum if a minimal singular cone is
/// 3-dimensional.
OrbitGraph singular_locus_graph(const Fan& f);

}  // namespace toricmot
