#include "toricmot/resolution.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <tuple>

#include "toricmot/error.hpp"
#include "toricmot/motive.hpp"

namespace toricmot {

namespace {

// v with det(u, v) = 1 for primitive rank-2 u.
LatticeVector unimodular_partner(const LatticeVector& u) {
  // extended Euclid on (u0, u1): s*u0 + t*u1 = 1
  Int r0 = u[0], r1 = u[1], s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const Int q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
    std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
  }
  if (r0 < 0) {
    s0 = -s0;
    t0 = -t0;
  }
  // u0*y - u1*x = 1 with y = s0, x = -t0
  return LatticeVector{-t0, s0};
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

void require_plane_cone(const LatticeVector& u1, const LatticeVector& u2) {
  if (u1.rank() != 2 || u2.rank() != 2) throw ToricError(Errc::WrongDimension, "HJ subdivision needs rank-2 vectors");
  if (det2(u1, u2) == 0) {
    throw ToricError(Errc::WrongDimension, "generators " + u1.to_string() + ", " + u2.to_string() +
                                               " do not span a 2-dimensional cone");
  }
}

}  // namespace

std::vector<LatticeVector> resolve_cone_2d(const LatticeVector& u1_in, const LatticeVector& u2_in) {
  require_plane_cone(u1_in, u2_in);
  const LatticeVector a = primitive(u1_in);
  const LatticeVector b = primitive(u2_in);
  if (det2(a, b) < 0) {
    auto rev = resolve_cone_2d(b, a);
    std::reverse(rev.begin(), rev.end());
    return rev;
  }
  std::vector<LatticeVector> out;
  LatticeVector u = a;
  for (;;) {
    const Int d = det2(u, b);
    if (d == 1) break;
    const LatticeVector v = unimodular_partner(u);
    const Int alpha = det2(b, v);
    LatticeVector w = v + ceil_div(alpha, d) * u;
    out.push_back(w);
    u = std::move(w);
  }
  return out;
}

std::vector<LatticeVector> resolve_cone_2d(const Fan& f, const Cone& c) {
  if (f.rank() != 2 || c.size() != 2) {
    throw ToricError(Errc::WrongDimension, f.describe(c) + " is not a 2-dimensional cone of a rank-2 fan");
  }
  return resolve_cone_2d(f.ray(c.rays[0]), f.ray(c.rays[1]));
}

std::pair<Int, Int> cone_type_2d(const LatticeVector& u1_in, const LatticeVector& u2_in) {
  require_plane_cone(u1_in, u2_in);
  const LatticeVector u1 = primitive(u1_in);
  const LatticeVector u2 = primitive(u2_in);
  const LatticeVector v = unimodular_partner(u1);
  // u1 -> (0,1), v -> (1,0) sends u2 to (det(u1,u2), det(u2,v))
  const Int d = std::abs(det2(u1, u2));
  Int y = det2(u2, v);
  Int k = (-y) % d;
  if (k < 0) k += d;
  return {d, k};
}

ResolutionResult resolve_fan_2d(const Fan& f) {
  if (f.rank() != 2) throw ToricError(Errc::RankMismatch, "resolution is implemented for rank-2 fans only");
  validate_fan(f);

  std::vector<LatticeVector> rays = f.rays();
  std::vector<Cone> cones;
  std::vector<LatticeVector> added;
  std::map<Cone, std::size_t> chains;
  for (const auto& c : f.max_cones()) {
    if (c.size() < 2) {
      cones.push_back(c);
      continue;
    }
    const auto inserted = resolve_cone_2d(f, c);
    if (inserted.empty()) {
      cones.push_back(c);
      continue;
    }
    chains[c] = inserted.size();
    std::vector<std::size_t> path{c.rays[0]};
    for (const auto& w : inserted) {
      path.push_back(rays.size());
      rays.push_back(w);
      added.push_back(w);
    }
    path.push_back(c.rays[1]);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) cones.push_back(Cone{path[i], path[i + 1]});
  }

  Fan refined(2, std::move(rays), std::move(cones));
  validate_fan(refined);
  return ResolutionResult{std::move(refined), std::move(added), std::move(chains)};
}

ExceptionalModel ResolutionResult::exceptional_model() const {
  ExceptionalModel e;
  e.num_components = per_cone_chains.size();
  for (const auto& [cone, len] : per_cone_chains) e.chain_lengths.push_back(static_cast<Int>(len));
  e.total_lines = std::accumulate(e.chain_lengths.begin(), e.chain_lengths.end(), Int{0});
  return e;
}

Motive exceptional_motive(const ExceptionalModel& e) {
  return Motive({MotiveSummand{FGAbelianGroup::free(static_cast<Int>(e.num_components)), 0, 0},
                 MotiveSummand{FGAbelianGroup::free(e.total_lines), 1, 0}});
}

}  // namespace toricmot
