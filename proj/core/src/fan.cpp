#include "toricmot/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "polyhedral.hpp"
#include "toricmot/error.hpp"

namespace toricmot {

using detail::BigInt;
using detail::Rel;

Cone::Cone(std::vector<std::size_t> indices) : rays(std::move(indices)) {
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
}

bool Cone::contains_ray(std::size_t i) const { return std::binary_search(rays.begin(), rays.end(), i); }

bool Cone::subset_of(const Cone& other) const {
  return std::includes(other.rays.begin(), other.rays.end(), rays.begin(), rays.end());
}

Fan::Fan(std::size_t rank, std::vector<LatticeVector> rays, std::vector<Cone> max_cones)
    : rank_(rank), rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
  if (rank_ != 2 && rank_ != 3) {
    throw ToricError(Errc::RankMismatch, "fans must have rank 2 or 3, got " + std::to_string(rank_));
  }
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (rays_[i].rank() != rank_) {
      throw ToricError(Errc::RankMismatch, "ray " + std::to_string(i) + " " + rays_[i].to_string() +
                                               " does not have length " + std::to_string(rank_));
    }
  }
  for (std::size_t c = 0; c < max_cones_.size(); ++c) {
    if (max_cones_[c].rays.empty()) {
      throw ToricError(Errc::BadConeIndex, "cone " + std::to_string(c) + " has no rays");
    }
    for (std::size_t i : max_cones_[c].rays) {
      if (i >= rays_.size()) {
        throw ToricError(Errc::BadConeIndex,
                         "cone " + std::to_string(c) + " refers to missing ray " + std::to_string(i));
      }
    }
  }
}

std::vector<LatticeVector> Fan::generators(const Cone& c) const {
  std::vector<LatticeVector> out;
  out.reserve(c.rays.size());
  for (std::size_t i : c.rays) out.push_back(rays_.at(i));
  return out;
}

Fan Fan::transformed(const IntegerMatrix& g) const {
  if (g.rows() != rank_ || g.cols() != rank_) throw ToricError(Errc::RankMismatch, "basis change has wrong shape");
  std::vector<LatticeVector> out;
  out.reserve(rays_.size());
  for (const auto& r : rays_) {
    std::vector<Int> v(rank_, 0);
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < rank_; ++j) v[i] = checked_add(v[i], checked_mul(g(i, j), r[j]));
    out.emplace_back(std::move(v));
  }
  return Fan(rank_, std::move(out), max_cones_);
}

std::string Fan::describe(const Cone& c) const {
  std::ostringstream os;
  os << "Cone(";
  for (std::size_t k = 0; k < c.rays.size(); ++k) {
    if (k) os << ',';
    os << rays_.at(c.rays[k]).to_string();
  }
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// Dual cones

namespace {

// Facet normals of a full-dimensional pointed cone in Z^d, d <= 3.
std::vector<LatticeVector> full_dim_facet_normals(const std::vector<LatticeVector>& gens, std::size_t d) {
  std::set<LatticeVector> normals;
  auto valid = [&](const LatticeVector& n) {
    return std::all_of(gens.begin(), gens.end(), [&](const LatticeVector& g) { return dot(n, g) >= 0; });
  };
  auto try_normal = [&](LatticeVector n) {
    if (n.is_zero()) return;
    if (!valid(n)) n = -n;
    if (valid(n)) normals.insert(primitive(n));
  };
  if (d == 1) {
    normals.insert(LatticeVector{gens.front()[0] > 0 ? Int{1} : Int{-1}});
  } else if (d == 2) {
    for (const auto& g : gens) try_normal(LatticeVector{checked_neg(g[1]), g[0]});
  } else {
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) try_normal(cross(gens[i], gens[j]));
  }
  return {normals.begin(), normals.end()};
}

}  // namespace

DualCone dual_cone(std::span<const LatticeVector> generators) {
  if (generators.empty()) throw ToricError(Errc::BadParameters, "dual_cone of an empty generator list");
  const std::size_t n = generators.front().rank();
  if (!detail::is_pointed(generators)) {
    throw ToricError(Errc::NotStronglyConvex, "dual_cone needs a strongly convex cone");
  }
  // Columns = generators; P A Q = D puts span(cone) on the first d axes of
  // the coordinates x' = P x.
  IntegerMatrix a(n, generators.size());
  for (std::size_t j = 0; j < generators.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) a(i, j) = generators[j][i];
  auto dec = detail::smith_decompose(detail::to_big(a), n, generators.size());
  const std::size_t d = dec.rank;

  std::vector<LatticeVector> reduced;
  for (const auto& g : generators) {
    std::vector<Int> v(d);
    for (std::size_t r = 0; r < d; ++r) {
      BigInt s = 0;
      for (std::size_t k = 0; k < n; ++k) s += dec.left[r][k] * g[k];
      v[r] = detail::to_int(s);
    }
    reduced.emplace_back(std::move(v));
  }

  // m_old = P^T m_new
  auto lift = [&](const std::vector<Int>& m_new) {
    std::vector<Int> m(n);
    for (std::size_t k = 0; k < n; ++k) {
      BigInt s = 0;
      for (std::size_t r = 0; r < m_new.size(); ++r) s += dec.left[r][k] * m_new[r];
      m[k] = detail::to_int(s);
    }
    return primitive(LatticeVector(std::move(m)));
  };

  DualCone out;
  for (const auto& nrm : full_dim_facet_normals(reduced, d)) out.rays.push_back(lift(nrm.coords()));
  for (std::size_t r = d; r < n; ++r) {
    std::vector<Int> e(n, 0);
    e[r] = 1;
    out.lineality.push_back(lift(e));
  }
  std::sort(out.rays.begin(), out.rays.end());
  return out;
}

namespace detail {

ConeHRep cone_hrep(std::span<const LatticeVector> gens) {
  DualCone dual = dual_cone(gens);
  return ConeHRep{std::move(dual.rays), std::move(dual.lineality)};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Faces

std::size_t cone_dimension(const Fan& f, const Cone& c) {
  auto gens = f.generators(c);
  return span_rank(gens);
}

std::vector<Cone> proper_faces(const Fan& f, const Cone& c) {
  std::vector<Cone> out;
  const std::size_t dim = cone_dimension(f, c);
  if (dim <= 1) return out;
  for (std::size_t i : c.rays) out.push_back(Cone{i});
  if (dim == 3) {
    auto gens = f.generators(c);
    for (auto [i, j] : detail::facet_pairs_3d(gens)) out.push_back(Cone{c.rays[i], c.rays[j]});
  }
  return out;
}

std::vector<Cone> enumerate_faces(const Fan& f) {
  std::set<Cone> faces;
  for (const auto& c : f.max_cones()) {
    faces.insert(c);
    for (auto& face : proper_faces(f, c)) faces.insert(std::move(face));
  }
  std::vector<std::pair<std::size_t, Cone>> keyed;
  for (const auto& face : faces) keyed.emplace_back(cone_dimension(f, face), face);
  std::sort(keyed.begin(), keyed.end());
  std::vector<Cone> out;
  out.reserve(keyed.size());
  for (auto& [dim, face] : keyed) out.push_back(std::move(face));
  return out;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

std::string ray_label(const Fan& f, std::size_t i) { return "ray " + std::to_string(i) + " " + f.ray(i).to_string(); }

std::string cone_label(const Fan& f, std::size_t c) {
  return "cone " + std::to_string(c) + " " + f.describe(f.max_cones()[c]);
}

// m with <m,r> = 0 on the shared rays, > 0 on the rest of a, < 0 on the
// rest of b. Its existence means a and b meet in the common face.
bool separable(const Fan& f, const Cone& a, const Cone& b) {
  detail::System sys;
  for (std::size_t i : a.rays) {
    if (b.contains_ray(i)) {
      sys.push_back(detail::homogeneous(f.ray(i), Rel::Eq));
    } else {
      sys.push_back(detail::homogeneous(f.ray(i), Rel::Gt));
    }
  }
  for (std::size_t i : b.rays) {
    if (a.contains_ray(i)) continue;
    sys.push_back(detail::homogeneous(-f.ray(i), Rel::Gt));
  }
  return detail::feasible(std::move(sys), f.rank());
}

std::vector<detail::ConeHRep> all_hreps(const Fan& f) {
  std::vector<detail::ConeHRep> out;
  for (const auto& c : f.max_cones()) {
    auto gens = f.generators(c);
    out.push_back(detail::cone_hrep(gens));
  }
  return out;
}

}  // namespace

FanProfile validate_fan(const Fan& f) {
  if (f.rays().empty() || f.max_cones().empty()) {
    throw ToricError(Errc::EmptyFan, "a fan needs at least one ray and one cone");
  }
  for (std::size_t i = 0; i < f.rays().size(); ++i) {
    if (!f.ray(i).is_primitive()) throw ToricError(Errc::NonPrimitiveRay, ray_label(f, i) + " is not primitive");
    for (std::size_t j = 0; j < i; ++j)
      if (f.ray(i) == f.ray(j)) throw ToricError(Errc::DuplicateRay, ray_label(f, i) + " repeats ray " + std::to_string(j));
  }

  const auto& cones = f.max_cones();
  for (std::size_t c = 0; c < cones.size(); ++c) {
    auto gens = f.generators(cones[c]);
    if (!detail::is_pointed(gens)) {
      throw ToricError(Errc::NotStronglyConvex, cone_label(f, c) + " contains a line");
    }
    for (std::size_t k = 0; k < gens.size(); ++k) {
      std::vector<LatticeVector> others;
      for (std::size_t l = 0; l < gens.size(); ++l)
        if (l != k) others.push_back(gens[l]);
      if (!others.empty() && detail::in_cone(gens[k], others)) {
        throw ToricError(Errc::RayNotExtreme,
                         ray_label(f, cones[c].rays[k]) + " is not an extreme ray of " + cone_label(f, c));
      }
    }
  }

  std::vector<bool> used(f.rays().size(), false);
  for (const auto& c : cones)
    for (std::size_t i : c.rays) used[i] = true;
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) throw ToricError(Errc::UnusedRay, ray_label(f, i) + " lies in no cone");

  for (std::size_t a = 0; a < cones.size(); ++a) {
    for (std::size_t b = a + 1; b < cones.size(); ++b) {
      if (cones[a].subset_of(cones[b]) || cones[b].subset_of(cones[a])) {
        throw ToricError(Errc::NotMaximal, cone_label(f, a) + " and " + cone_label(f, b) +
                                               ": one is contained in the other");
      }
      if (!separable(f, cones[a], cones[b])) {
        throw ToricError(Errc::BadFaceIntersection,
                         cone_label(f, a) + " and " + cone_label(f, b) + " do not meet in a common face");
      }
    }
  }

  FanProfile p;
  p.d.assign(f.rank() + 1, 0);
  p.d[0] = 1;
  for (const auto& face : enumerate_faces(f)) ++p.d[cone_dimension(f, face)];
  p.span_dim = span_rank(f.rays());
  p.is_complete = is_complete(f);
  if (f.rank() == 2 && p.span_dim == 2) p.index_m = fan_index(f);
  return p;
}

// ---------------------------------------------------------------------------
// Cone invariants

Int cone_multiplicity(const Fan& f, const Cone& c) {
  if (c.size() != 2 || cone_dimension(f, c) != 2) {
    throw ToricError(Errc::WrongDimension, "multiplicity needs a two-dimensional cone, got " + f.describe(c));
  }
  auto gens = f.generators(c);
  return gcd_of_maximal_minors(IntegerMatrix::from_rows(gens));
}

bool is_smooth_cone(const Fan& f, const Cone& c) {
  auto gens = f.generators(c);
  SmithForm s = smith_normal_form(IntegerMatrix::from_rows(gens));
  if (s.rank != gens.size()) return false;
  return std::all_of(s.diag.begin(), s.diag.end(), [](Int d) { return d == 1; });
}

bool is_smooth(const Fan& f) {
  return std::all_of(f.max_cones().begin(), f.max_cones().end(),
                     [&](const Cone& c) { return is_smooth_cone(f, c); });
}

std::vector<Cone> minimal_singular_cones(const Fan& f) {
  std::vector<Cone> out;
  for (const auto& face : enumerate_faces(f)) {
    if (cone_dimension(f, face) < 2 || is_smooth_cone(f, face)) continue;
    auto sub = proper_faces(f, face);
    if (std::all_of(sub.begin(), sub.end(), [&](const Cone& s) { return is_smooth_cone(f, s); })) {
      out.push_back(face);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Support

bool is_complete(const Fan& f) {
  if (span_rank(f.rays()) < f.rank()) return false;
  // In a fan whose cones meet along common faces, the support is all of N_R
  // iff every maximal cone is full-dimensional and every facet is shared by
  // exactly two of them.
  std::map<Cone, int> facet_use;
  for (const auto& c : f.max_cones()) {
    if (cone_dimension(f, c) != f.rank()) return false;
    for (const auto& face : proper_faces(f, c))
      if (cone_dimension(f, face) + 1 == f.rank()) ++facet_use[face];
  }
  return !facet_use.empty() &&
         std::all_of(facet_use.begin(), facet_use.end(), [](const auto& kv) { return kv.second == 2; });
}

bool support_contains(const Fan& f, const LatticeVector& p) {
  return std::any_of(f.max_cones().begin(), f.max_cones().end(), [&](const Cone& c) {
    auto gens = f.generators(c);
    return detail::in_cone(p, gens);
  });
}

bool support_is_convex(const Fan& f) {
  // conv(|f|) = cone(all rays) is the union of the simplicial cones on its
  // maximal independent ray subsets; each must lie in |f|.
  const auto& rays = f.rays();
  const std::size_t dim = span_rank(rays);
  auto hreps = all_hreps(f);
  std::vector<bool> pick(rays.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(dim), true);
  do {
    std::vector<LatticeVector> subset;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (pick[i]) subset.push_back(rays[i]);
    if (span_rank(subset) != dim) continue;
    auto region = detail::hrep_system(detail::cone_hrep(subset));
    if (!detail::region_covered(region, hreps, f.rank())) return false;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return true;
}

Int fan_index(const Fan& f) {
  if (f.rank() != 2) throw ToricError(Errc::RankMismatch, "the fan index is defined for rank-2 fans");
  Int g = 0;
  const auto& rays = f.rays();
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (std::size_t j = i + 1; j < rays.size(); ++j) g = gcd(g, det2(rays[i], rays[j]));
  if (g == 0) throw ToricError(Errc::DegenerateIndex, "all ray determinants vanish (rays span a line)");
  return g;
}

}  // namespace toricmot
