#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toricmot/cellularity.hpp"
#include "toricmot/fan.hpp"
#include "toricmot/homology.hpp"
#include "toricmot/motive.hpp"
#include "toricmot/resolution.hpp"

namespace toricmot {

struct SurfaceMotiveReport {
  Motive motive;
  /// True when the motive is M(X); otherwise it is M^c(X).
  bool complete = false;
  bool pure_tate = false;
  /// Rays span less than the lattice; the torsion term is read as trivial.
  bool degenerate = false;
  FanProfile profile;
  GradedGroups homology;
  std::optional<ResolutionResult> resolution;
  CellularityCertificate certificate;
};

/// Resolve, certify the resolution cellular, compute Borel-Moore homology
/// and assemble. Throws CellularityNotCertified when the certificate for
/// the resolution fails.
SurfaceMotiveReport toric_surface_motive(const Fan& f, const CellularityOptions& options = {});

/// Cofiber presentation of the resolution square of a complete singular
/// surface: E = chains of lines, Z = the singular points, X~ cellular with
/// counts (1, r~ - 2, 1). Empty for smooth or non-complete input.
std::optional<CofiberReport> surface_cofiber(const SurfaceMotiveReport& report);

/// Throws NotARefinement unless every cone of `fine` lies in a cone of
/// `coarse`, the supports agree and every ray of `coarse` is a ray of `fine`.
void check_refinement(const Fan& coarse, const Fan& fine);

enum class MotiveStatus { Determined, Undetermined, Obstructed, NotCertified };

std::string_view motive_status_name(MotiveStatus s) noexcept;

struct ThreefoldMotiveReport {
  MotiveStatus status = MotiveStatus::NotCertified;
  std::optional<Motive> motive;
  bool complete = false;
  std::optional<int> violated_index;
  std::vector<Cone> minimal_singular;
  /// 3-dimensional minimal singular cones.
  std::vector<Cone> isolated_points;
  /// Graph of the 1-dimensional part of the singular locus.
  OrbitGraph singular_curves;
  std::optional<CellularityCertificate> certificate;
  std::vector<std::string> assumptions;
  std::string reason;
};

/// Rank-3 pipeline with externally supplied Borel-Moore homology. A smooth
/// refinement is needed when the fan is singular.
ThreefoldMotiveReport threefold_motive(const Fan& f, const GradedGroups& h, const std::optional<Fan>& refinement,
                                       const CellularityOptions& options = {});

}  // namespace toricmot
