#include "toricmot/cellularity.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#include "polyhedral.hpp"
#include "toricmot/error.hpp"

namespace toricmot {

namespace {

using detail::ConeHRep;

bool hrep_contains(const ConeHRep& h, const LatticeVector& p) {
  return std::all_of(h.inequalities.begin(), h.inequalities.end(), [&](const auto& m) { return dot(m, p) >= 0; }) &&
         std::all_of(h.equalities.begin(), h.equalities.end(), [&](const auto& l) { return dot(l, p) == 0; });
}

std::vector<ConeHRep> cone_hreps(const Fan& f) {
  std::vector<ConeHRep> out;
  for (const auto& c : f.max_cones()) {
    auto gens = f.generators(c);
    out.push_back(detail::cone_hrep(gens));
  }
  return out;
}

bool in_support(std::span<const ConeHRep> hreps, const LatticeVector& p) {
  return std::any_of(hreps.begin(), hreps.end(), [&](const ConeHRep& h) { return hrep_contains(h, p); });
}

// Primitive generators that are extreme in their cone, sorted.
std::vector<LatticeVector> extreme_generators(std::span<const LatticeVector> gens) {
  std::set<LatticeVector> uniq;
  for (const auto& g : gens)
    if (!g.is_zero()) uniq.insert(primitive(g));
  std::vector<LatticeVector> all(uniq.begin(), uniq.end());
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::vector<LatticeVector> others;
    for (std::size_t j = 0; j < all.size(); ++j)
      if (j != i) others.push_back(all[j]);
    if (others.empty() || !detail::in_cone(all[i], others)) out.push_back(all[i]);
  }
  return out;
}

// Lattice points of the half-open parallelepiped sum [0,1) g_j of linearly
// independent generators.
std::vector<LatticeVector> parallelepiped_points(const std::vector<LatticeVector>& g) {
  const std::size_t n = g.front().rank();
  const std::size_t k = g.size();

  // k coordinate rows with a nonzero k x k minor.
  std::vector<std::size_t> rows;
  Int big_d = 0;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> r;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) r.push_back(i);
    IntegerMatrix m(k, k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) m(a, b) = g[b][r[a]];
    const Int d = determinant(m);
    if (d != 0) {
      rows = r;
      big_d = d;
      break;
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));

  std::vector<Int> lo(n, 0), hi(n, 0);
  for (const auto& v : g) {
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] < 0) lo[i] = checked_add(lo[i], v[i]);
      else hi[i] = checked_add(hi[i], v[i]);
    }
  }

  std::vector<LatticeVector> out;
  std::vector<Int> p(lo);
  const Int abs_d = std::abs(big_d);
  for (;;) {
    const LatticeVector pv(p);
    std::vector<Int> num(k);
    bool inside = true;
    for (std::size_t j = 0; j < k && inside; ++j) {
      IntegerMatrix m(k, k);
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) m(a, b) = (b == j) ? p[rows[a]] : g[b][rows[a]];
      num[j] = determinant(m);
      if (big_d < 0) num[j] = checked_neg(num[j]);
      inside = num[j] >= 0 && num[j] < abs_d;
    }
    if (inside && !pv.is_zero()) {
      // abs_d * p must equal sum num_j g_j
      for (std::size_t i = 0; i < n && inside; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < k; ++j) s = checked_add(s, checked_mul(num[j], g[j][i]));
        inside = s == checked_mul(abs_d, p[i]);
      }
      if (inside) out.push_back(pv);
    }
    std::size_t i = 0;
    while (i < n && p[i] == hi[i]) {
      p[i] = lo[i];
      ++i;
    }
    if (i == n) break;
    ++p[i];
  }
  return out;
}

std::vector<std::vector<LatticeVector>> triangulate(const std::vector<LatticeVector>& ext) {
  const std::size_t k = span_rank(ext);
  if (ext.size() == k) return {ext};
  // Only full-dimensional cones in rank 3 can be non-simplicial here:
  // pull from the first ray over the facets avoiding it.
  std::vector<std::vector<LatticeVector>> out;
  for (auto [i, j] : detail::facet_pairs_3d(ext)) {
    if (i == 0 || j == 0) continue;
    out.push_back({ext[0], ext[i], ext[j]});
  }
  return out;
}

std::string cone_in_basis(const std::vector<LatticeVector>& gens) {
  std::string s = "Cone(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ",";
    s += gens[i].to_basis_string();
  }
  return s + ")";
}

// All u with |u|_inf = r in lexicographic order.
std::vector<LatticeVector> shell(std::size_t n, Int r) {
  std::vector<LatticeVector> out;
  std::vector<Int> p(n, -r);
  for (;;) {
    if (std::any_of(p.begin(), p.end(), [&](Int x) { return std::abs(x) == r; })) out.emplace_back(p);
    std::size_t i = n;
    while (i > 0 && p[i - 1] == r) {
      p[i - 1] = -r;
      --i;
    }
    if (i == 0) break;
    ++p[i - 1];
  }
  return out;
}

class StarShapedOracle {
 public:
  explicit StarShapedOracle(const Fan& f) : f_(f), hreps_(cone_hreps(f)), complete_(is_complete(f)) {}

  bool operator()(const LatticeVector& u) {
    if (u.is_zero() || complete_) return true;
    const LatticeVector dir = primitive(u);
    if (auto it = memo_.find(dir); it != memo_.end()) return it->second;
    bool ok = in_support(hreps_, dir);
    for (std::size_t i = 0; ok && i < f_.rays().size(); ++i) ok = in_support(hreps_, f_.ray(i) + dir);
    // The star-shaping set is a cone, so the direction decides.
    if (ok) ok = star_shaped_test(f_, dir);
    memo_.emplace(dir, ok);
    return ok;
  }

 private:
  const Fan& f_;
  std::vector<ConeHRep> hreps_;
  bool complete_;
  std::map<LatticeVector, bool> memo_;
};

}  // namespace

bool star_shaped_test(const Fan& f, const LatticeVector& u) {
  if (u.rank() != f.rank()) throw ToricError(Errc::RankMismatch, "translation vector has the wrong rank");
  if (u.is_zero()) return true;
  const auto hreps = cone_hreps(f);
  for (const auto& h : hreps) {
    const auto region = detail::hrep_system(h, u);
    if (!detail::region_covered(region, hreps, f.rank())) return false;
  }
  return true;
}

std::vector<LatticeVector> hilbert_basis(std::span<const LatticeVector> generators) {
  if (generators.empty()) return {};
  if (!detail::is_pointed(generators)) {
    throw ToricError(Errc::UnboundedLineality, "Hilbert basis requested for a cone containing a line");
  }
  const auto ext = extreme_generators(generators);
  const auto hrep = detail::cone_hrep(ext);

  std::set<LatticeVector> candidates(ext.begin(), ext.end());
  for (const auto& simplex : triangulate(ext))
    for (auto& p : parallelepiped_points(simplex)) candidates.insert(std::move(p));

  std::vector<LatticeVector> out;
  for (const auto& x : candidates) {
    const bool reducible = std::any_of(candidates.begin(), candidates.end(), [&](const LatticeVector& y) {
      return y != x && hrep_contains(hrep, x - y);
    });
    if (!reducible) out.push_back(x);
  }
  return out;
}

std::vector<LatticeVector> dual_hilbert_basis(std::span<const LatticeVector> generators) {
  const DualCone dual = dual_cone(generators);
  std::set<LatticeVector> out;
  for (auto& m : hilbert_basis(dual.rays)) out.insert(std::move(m));
  for (const auto& l : dual.lineality) {
    out.insert(l);
    out.insert(-l);
  }
  return {out.begin(), out.end()};
}

std::vector<LatticeVector> regular_covectors(const Fan& f) {
  std::set<LatticeVector> out;
  for (const auto& c : f.max_cones()) {
    auto gens = f.generators(c);
    for (auto& m : dual_hilbert_basis(gens)) out.insert(std::move(m));
  }
  return {out.begin(), out.end()};
}

bool is_regular(const Fan& f, const LatticeVector& u) {
  const auto cov = regular_covectors(f);
  return std::none_of(cov.begin(), cov.end(), [&](const LatticeVector& m) { return dot(m, u) == 0; });
}

bool verify_regular_vector(const Fan& f, const LatticeVector& u) {
  return !u.is_zero() && is_regular(f, u) && star_shaped_test(f, u);
}

int default_search_bound() {
  if (const char* env = std::getenv("TORICMOT_SEARCH_BOUND")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1000) return static_cast<int>(v);
  }
  return 16;
}

RegularVectorSearch regular_vector_search(const Fan& f, int bound) {
  const auto cov = regular_covectors(f);
  StarShapedOracle star(f);
  std::set<LatticeVector> star_dirs;
  for (Int r = 1; r <= bound; ++r) {
    for (const auto& u : shell(f.rank(), r)) {
      const bool regular = std::none_of(cov.begin(), cov.end(), [&](const LatticeVector& m) { return dot(m, u) == 0; });
      const bool a = star(u);
      if (a && regular) return {u, {}};
      if (a) star_dirs.insert(primitive(u));
    }
  }
  const std::string bound_text = "|u|_inf <= " + std::to_string(bound);
  if (star_dirs.empty()) return {std::nullopt, "no star-shaping vector (" + bound_text + ")"};
  std::vector<LatticeVector> dirs(star_dirs.begin(), star_dirs.end());
  if (span_rank(dirs) < f.rank()) {
    return {std::nullopt, "condition b fails on " + cone_in_basis(extreme_generators(dirs))};
  }
  return {std::nullopt, "bound exhausted (" + bound_text + ")"};
}

std::string_view status_name(CellularityStatus s) noexcept {
  switch (s) {
    case CellularityStatus::Cellular: return "Cellular";
    case CellularityStatus::NotCertified: return "NotCertified";
    case CellularityStatus::Obstructed: return "Obstructed";
  }
  return "?";
}

std::string_view source_name(QuasiprojectiveSource s) noexcept {
  switch (s) {
    case QuasiprojectiveSource::None: return "None";
    case QuasiprojectiveSource::UserFlag: return "UserFlag";
    case QuasiprojectiveSource::CompleteRank2: return "CompleteRank2";
    case QuasiprojectiveSource::ConvexSupportPolyhedral: return "ConvexSupportPolyhedral";
    case QuasiprojectiveSource::RefinementOfQuasiprojective: return "RefinementOfQuasiprojective";
  }
  return "?";
}

CellularityCertificate certify_cellular(const Fan& f, const CellularityOptions& options) {
  validate_fan(f);
  CellularityCertificate cert;

  if (options.quasiprojective) {
    if (*options.quasiprojective) cert.quasiprojective_source = QuasiprojectiveSource::UserFlag;
  } else if (options.refines_quasiprojective) {
    cert.quasiprojective_source = QuasiprojectiveSource::RefinementOfQuasiprojective;
  } else if (f.rank() == 2 && is_complete(f)) {
    cert.quasiprojective_source = QuasiprojectiveSource::CompleteRank2;
  } else if (f.max_cones().size() == 1 || (f.rank() == 2 && support_is_convex(f))) {
    cert.quasiprojective_source = QuasiprojectiveSource::ConvexSupportPolyhedral;
  }

  for (const auto& c : f.max_cones()) {
    if (!is_smooth_cone(f, c)) {
      cert.status = CellularityStatus::Obstructed;
      cert.reason = "fan is not smooth: " + f.describe(c) + " is singular";
      return cert;
    }
  }
  for (const auto& c : f.max_cones()) {
    if (cone_dimension(f, c) < f.rank()) {
      cert.status = CellularityStatus::NotCertified;
      cert.reason = "maximal cone " + f.describe(c) + " is not full-dimensional (fixed points not isolated)";
      return cert;
    }
  }

  auto search = regular_vector_search(f, options.search_bound);
  if (!search.u) {
    cert.status = CellularityStatus::NotCertified;
    cert.reason = search.reason;
    return cert;
  }
  cert.u = search.u;
  if (cert.quasiprojective_source == QuasiprojectiveSource::None) {
    cert.status = CellularityStatus::NotCertified;
    cert.reason = options.quasiprojective == false ? "declared not quasiprojective" : "quasiprojectivity not established";
    return cert;
  }
  cert.status = CellularityStatus::Cellular;
  return cert;
}

// ---------------------------------------------------------------------------
// Orbit graph

std::size_t OrbitGraph::degree(std::size_t v) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [&](const Edge& e) { return e.a == v; }) +
      std::count_if(edges.begin(), edges.end(), [&](const Edge& e) { return e.b == v; }));
}

std::size_t OrbitGraph::junction_count() const {
  std::size_t n = 0;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (vertices[v].kind == VertexKind::FixedPoint && degree(v) >= 2) ++n;
  return n;
}

OrbitGraph orbit_graph(const Fan& f, std::span<const Cone> faces) {
  OrbitGraph g;
  std::map<Cone, std::size_t> fixed;
  std::vector<Cone> three_cones;
  for (const auto& c : f.max_cones())
    if (cone_dimension(f, c) == 3) three_cones.push_back(c);
  std::sort(three_cones.begin(), three_cones.end());

  auto fixed_vertex = [&](const Cone& c) {
    auto [it, inserted] = fixed.emplace(c, g.vertices.size());
    if (inserted) g.vertices.push_back({OrbitGraph::VertexKind::FixedPoint, c});
    return it->second;
  };
  for (const auto& face : faces) {
    std::vector<std::size_t> ends;
    for (const auto& c : three_cones)
      if (face.subset_of(c)) ends.push_back(fixed_vertex(c));
    while (ends.size() < 2) {
      ends.push_back(g.vertices.size());
      g.vertices.push_back({OrbitGraph::VertexKind::OpenEnd, face});
    }
    g.edges.push_back({face, ends[0], ends[1]});
  }

  std::vector<std::size_t> parent(g.vertices.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = g.vertices.size();
  for (const auto& e : g.edges) {
    const std::size_t a = find(e.a), b = find(e.b);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  g.component_count = components;
  g.first_betti = g.edges.size() + components - g.vertices.size();
  return g;
}

OrbitGraph singular_locus_graph(const Fan& f) {
  if (f.rank() != 3) throw ToricError(Errc::RankMismatch, "the orbit graph is built for rank-3 fans");
  std::vector<Cone> faces;
  for (const auto& c : minimal_singular_cones(f)) {
    if (cone_dimension(f, c) == 3) {
      throw ToricError(Errc::UnsupportedSingularStratum,
                       "minimal singular cone " + f.describe(c) + " is 3-dimensional (isolated singular point)");
    }
    faces.push_back(c);
  }
  return orbit_graph(f, faces);
}

}  // namespace toricmot
