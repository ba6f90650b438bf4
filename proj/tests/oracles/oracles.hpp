#pragma once

// Brute-force reference implementations. They deliberately avoid the
// library's polyhedral code: membership is decided from facet normals found
// by exhaustive search, hulls by monotone chain, and so on.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "toricmot/lattice.hpp"

namespace toricmot::oracle {

using Vec = std::vector<Int>;

inline Int dot(const Vec& a, const Vec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Int cross2(const Vec& o, const Vec& a, const Vec& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

inline Int igcd(Int a, Int b) {
  a = std::abs(a);
  b = std::abs(b);
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

/// Inward facet normals of a pointed cone of dimension = rank (2 or 3),
/// by testing every candidate normal built from pairs of generators.
inline std::vector<Vec> facet_normals(const std::vector<Vec>& gens) {
  const std::size_t n = gens.front().size();
  std::vector<Vec> cand;
  if (n == 2) {
    for (const auto& g : gens) {
      cand.push_back({-g[1], g[0]});
      cand.push_back({g[1], -g[0]});
    }
  } else {
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const auto& a = gens[i];
        const auto& b = gens[j];
        Vec c{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
        if (std::any_of(c.begin(), c.end(), [](Int x) { return x != 0; })) cand.push_back(c);
      }
  }
  std::set<Vec> out;
  for (const auto& c : cand) {
    if (std::all_of(gens.begin(), gens.end(), [&](const Vec& g) { return dot(c, g) >= 0; })) {
      Int g = 0;
      for (Int x : c) g = igcd(g, x);
      Vec p = c;
      for (auto& x : p) x /= g;
      out.insert(p);
    }
  }
  return {out.begin(), out.end()};
}

/// Membership for a full-dimensional pointed cone.
struct FullCone {
  std::vector<Vec> normals;
  explicit FullCone(const std::vector<Vec>& gens) : normals(facet_normals(gens)) {}
  bool contains(const Vec& p) const {
    return std::all_of(normals.begin(), normals.end(), [&](const Vec& m) { return dot(m, p) >= 0; });
  }
};

/// Lattice points on the compact edges of conv(cone ∩ Z^2 \ {0}) strictly
/// between u1 and u2, found from the hull of all cone points in a box.
inline std::set<Vec> hj_boundary_points(const Vec& u1, const Vec& u2) {
  const Int box = std::max({std::abs(u1[0]), std::abs(u1[1]), std::abs(u2[0]), std::abs(u2[1])}) + 1;
  FullCone cone({u1, u2});
  std::vector<Vec> pts;
  for (Int x = -box; x <= box; ++x)
    for (Int y = -box; y <= box; ++y)
      if ((x || y) && cone.contains({x, y})) pts.push_back({x, y});
  std::sort(pts.begin(), pts.end());
  std::vector<Vec> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);

  const Vec origin{0, 0};
  std::set<Vec> out;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Vec& p = hull[i];
    const Vec& q = hull[(i + 1) % hull.size()];
    if (cross2(p, q, origin) >= 0) continue;  // origin not strictly outside
    const Int g = igcd(q[0] - p[0], q[1] - p[1]);
    for (Int t = 0; t <= g; ++t) out.insert({p[0] + t * (q[0] - p[0]) / g, p[1] + t * (q[1] - p[1]) / g});
  }
  out.erase(u1);
  out.erase(u2);
  return out;
}

/// Value of the continued fraction a1 - 1/(a2 - 1/(...)) as (num, den).
inline std::pair<Int, Int> hj_value(const std::vector<Int>& a) {
  Int num = a.back(), den = 1;
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    // a_i - den/num
    const Int n2 = a[i] * num - den;
    den = num;
    num = n2;
  }
  const Int g = igcd(num, den);
  return {num / g, den / g};
}

/// Irreducible lattice points of a full-dimensional pointed cone, found by
/// exhaustive search in the box [-B, B]^n.
inline std::set<Vec> irreducibles_in_box(const std::vector<Vec>& gens, Int box) {
  const std::size_t n = gens.front().size();
  FullCone cone(gens);
  std::vector<Vec> pts;
  Vec p(n, -box);
  for (;;) {
    if (std::any_of(p.begin(), p.end(), [](Int x) { return x != 0; }) && cone.contains(p)) pts.push_back(p);
    std::size_t i = 0;
    while (i < n && p[i] == box) p[i++] = -box;
    if (i == n) break;
    ++p[i];
  }
  std::set<Vec> out;
  for (const auto& x : pts) {
    bool reducible = false;
    for (const auto& y : pts) {
      if (y == x) continue;
      Vec d(n);
      for (std::size_t i = 0; i < n; ++i) d[i] = x[i] - y[i];
      if (cone.contains(d)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.insert(x);
  }
  return out;
}

/// Every cone point in the box is a nonnegative integer combination of
/// `basis` (memoized descent along a strictly positive functional).
inline bool generates_box(const std::vector<Vec>& gens, const std::vector<Vec>& basis, Int box) {
  const std::size_t n = gens.front().size();
  FullCone cone(gens);
  Vec functional(n, 0);
  for (const auto& m : cone.normals)
    for (std::size_t i = 0; i < n; ++i) functional[i] += m[i];
  std::map<Vec, bool> memo;
  std::function<bool(const Vec&)> reach = [&](const Vec& x) -> bool {
    if (std::all_of(x.begin(), x.end(), [](Int v) { return v == 0; })) return true;
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& h : basis) {
      Vec d(n);
      for (std::size_t i = 0; i < n; ++i) d[i] = x[i] - h[i];
      if (cone.contains(d) && dot(functional, d) < dot(functional, x) && reach(d)) {
        ok = true;
        break;
      }
    }
    memo[x] = ok;
    return ok;
  };
  Vec p(n, -box);
  for (;;) {
    if (cone.contains(p) && !reach(p)) return false;
    std::size_t i = 0;
    while (i < n && p[i] == box) p[i++] = -box;
    if (i == n) break;
    ++p[i];
  }
  return true;
}

/// Cycle rank E - V + C of a multigraph via union-find.
inline std::size_t cycle_rank(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::size_t> parent(vertices);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::size_t cycles = 0;
  for (auto [a, b] : edges) {
    const std::size_t ra = find(a), rb = find(b);
    if (ra == rb) ++cycles;
    else parent[ra] = rb;
  }
  return cycles;
}

/// gcd of all 2x2 determinants by enumeration.
inline Int minors_gcd(const std::vector<Vec>& rays) {
  Int g = 0;
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (std::size_t j = i + 1; j < rays.size(); ++j) g = igcd(g, rays[i][0] * rays[j][1] - rays[i][1] * rays[j][0]);
  return g;
}

/// Random rational direction test: a direction outside every cone disproves
/// completeness. Returns false on the first miss.
inline bool monte_carlo_complete(const std::vector<std::vector<Vec>>& full_cones, std::size_t samples,
                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Int> coord(-1000, 1000);
  std::vector<FullCone> cones;
  for (const auto& g : full_cones) cones.emplace_back(g);
  const std::size_t n = full_cones.empty() ? 2 : full_cones.front().front().size();
  for (std::size_t s = 0; s < samples; ++s) {
    Vec p(n);
    for (auto& x : p) x = coord(rng);
    if (!std::any_of(cones.begin(), cones.end(), [&](const FullCone& c) { return c.contains(p); })) return false;
  }
  return true;
}

}  // namespace toricmot::oracle
