#include "toricmot/pipeline.hpp"

#include <algorithm>

#include "polyhedral.hpp"
#include "toricmot/error.hpp"

namespace toricmot {

namespace {

bool originally_quasiprojective(const Fan& f, const CellularityOptions& options) {
  return options.quasiprojective.value_or(false) || options.refines_quasiprojective || f.max_cones().size() == 1;
}

CellularityOptions options_for_refinement(const Fan& f, const CellularityOptions& options) {
  CellularityOptions out;
  out.search_bound = options.search_bound;
  if (options.quasiprojective == false) out.quasiprojective = false;
  else out.refines_quasiprojective = originally_quasiprojective(f, options);
  return out;
}

}  // namespace

SurfaceMotiveReport toric_surface_motive(const Fan& f, const CellularityOptions& options) {
  if (f.rank() != 2) throw ToricError(Errc::RankMismatch, "the surface pipeline needs a rank-2 fan");
  SurfaceMotiveReport r;
  r.profile = validate_fan(f);
  r.complete = r.profile.is_complete;
  r.degenerate = r.profile.degenerate(2);

  if (is_smooth(f)) {
    r.certificate = certify_cellular(f, options);
  } else {
    r.resolution = resolve_fan_2d(f);
    r.certificate = certify_cellular(r.resolution->refined_fan, options_for_refinement(f, options));
  }
  if (!r.certificate.cellular()) {
    throw ToricError(Errc::CellularityNotCertified, r.certificate.reason);
  }

  r.homology = surface_bm_homology(r.profile);
  r.motive = assemble_motive(r.homology);
  r.pure_tate = is_pure_tate(r.motive);
  return r;
}

std::optional<CofiberReport> surface_cofiber(const SurfaceMotiveReport& report) {
  if (!report.complete || !report.resolution) return std::nullopt;
  const ExceptionalModel e = report.resolution->exceptional_model();
  GradedGroups z(0);
  z.set(0, FGAbelianGroup::free(static_cast<Int>(e.num_components)));
  const Int r = static_cast<Int>(report.resolution->refined_fan.rays().size());
  const std::vector<Int> counts{1, r - 2, 1};
  return cofiber_diagnostic(tree_exceptional_homology(e), z, cellular_bm_homology(counts));
}

void check_refinement(const Fan& coarse, const Fan& fine) {
  if (coarse.rank() != fine.rank()) throw ToricError(Errc::NotARefinement, "refinement has a different rank");
  validate_fan(fine);
  for (const auto& r : coarse.rays()) {
    if (std::find(fine.rays().begin(), fine.rays().end(), r) == fine.rays().end()) {
      throw ToricError(Errc::NotARefinement, "ray " + r.to_string() + " is missing from the refinement");
    }
  }
  std::vector<detail::ConeHRep> coarse_h, fine_h;
  for (const auto& c : coarse.max_cones()) coarse_h.push_back(detail::cone_hrep(coarse.generators(c)));
  for (const auto& c : fine.max_cones()) fine_h.push_back(detail::cone_hrep(fine.generators(c)));

  for (const auto& c : fine.max_cones()) {
    const auto gens = fine.generators(c);
    const bool inside = std::any_of(coarse_h.begin(), coarse_h.end(), [&](const detail::ConeHRep& h) {
      return std::all_of(gens.begin(), gens.end(), [&](const LatticeVector& g) {
        return std::all_of(h.inequalities.begin(), h.inequalities.end(), [&](const auto& m) { return dot(m, g) >= 0; }) &&
               std::all_of(h.equalities.begin(), h.equalities.end(), [&](const auto& l) { return dot(l, g) == 0; });
      });
    });
    if (!inside) throw ToricError(Errc::NotARefinement, fine.describe(c) + " lies in no cone of the coarse fan");
  }
  for (std::size_t i = 0; i < coarse.max_cones().size(); ++i) {
    if (!detail::region_covered(detail::hrep_system(coarse_h[i]), fine_h, coarse.rank())) {
      throw ToricError(Errc::NotARefinement, coarse.describe(coarse.max_cones()[i]) + " is not covered by the refinement");
    }
  }
}

std::string_view motive_status_name(MotiveStatus s) noexcept {
  switch (s) {
    case MotiveStatus::Determined: return "determined";
    case MotiveStatus::Undetermined: return "undetermined";
    case MotiveStatus::Obstructed: return "obstructed";
    case MotiveStatus::NotCertified: return "not-certified";
  }
  return "?";
}

ThreefoldMotiveReport threefold_motive(const Fan& f, const GradedGroups& h, const std::optional<Fan>& refinement,
                                       const CellularityOptions& options) {
  if (f.rank() != 3) throw ToricError(Errc::RankMismatch, "the threefold pipeline needs a rank-3 fan");
  if (h.top_degree() != 6) {
    throw ToricError(Errc::BadParameters, "homology of a threefold needs top degree 6, got " + std::to_string(h.top_degree()));
  }
  ThreefoldMotiveReport r;
  const FanProfile profile = validate_fan(f);
  r.complete = profile.is_complete;

  r.minimal_singular = minimal_singular_cones(f);
  std::vector<Cone> curves;
  for (const auto& c : r.minimal_singular) {
    if (cone_dimension(f, c) == 3) r.isolated_points.push_back(c);
    else curves.push_back(c);
  }
  r.singular_curves = orbit_graph(f, curves);

  r.violated_index = first_hypothesis_violation(h);
  if (r.violated_index) {
    r.status = MotiveStatus::Undetermined;
    r.reason = "direct-sum hypothesis fails at i = " + std::to_string(*r.violated_index) + " (H_" +
               std::to_string(2 * *r.violated_index) + " has torsion, H_" + std::to_string(2 * *r.violated_index + 1) +
               " is nonzero)";
    if (r.complete && r.singular_curves.first_betti > 0) {
      r.reason += "; singular locus has first Betti number " + std::to_string(r.singular_curves.first_betti) +
                  ", so no cellular resolution exists";
    }
    return r;
  }

  const auto& g = r.singular_curves;
  for (const auto& e : g.edges) {
    if (g.vertices[e.a].kind == OrbitGraph::VertexKind::OpenEnd && g.vertices[e.b].kind == OrbitGraph::VertexKind::OpenEnd) {
      r.status = MotiveStatus::NotCertified;
      r.reason = "singular curve of " + f.describe(e.face) + " has no torus-fixed point";
      return r;
    }
  }
  if (g.first_betti > 0) {
    r.status = r.complete ? MotiveStatus::Obstructed : MotiveStatus::NotCertified;
    r.reason = "singular locus has first Betti number " + std::to_string(g.first_betti);
    if (r.complete) r.reason += ", so no cellular resolution exists";
    return r;
  }

  if (is_smooth(f)) {
    r.certificate = certify_cellular(f, options);
  } else if (!refinement) {
    r.status = MotiveStatus::NotCertified;
    r.reason = "fan is singular and no smooth refinement was supplied";
    return r;
  } else {
    check_refinement(f, *refinement);
    r.certificate = certify_cellular(*refinement, options_for_refinement(f, options));
    r.assumptions.push_back("exceptional locus of the refinement assumed cellular");
  }
  if (!r.certificate->cellular()) {
    r.status = r.certificate->status == CellularityStatus::Obstructed ? MotiveStatus::Obstructed : MotiveStatus::NotCertified;
    r.reason = r.certificate->reason;
    return r;
  }

  r.motive = assemble_motive(h);
  r.status = MotiveStatus::Determined;
  return r;
}

}  // namespace toricmot
