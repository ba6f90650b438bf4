#include "polyhedral.hpp"

#include <algorithm>

namespace toricmot::detail {

namespace {

int sign(const BigInt& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

void normalize(Constraint& c) {
  BigInt g = abs(c.constant);
  for (const auto& a : c.coeffs) g = gcd(g, abs(a));
  if (g > 1) {
    for (auto& a : c.coeffs) a /= g;
    c.constant /= g;
  }
}

bool all_zero(const Constraint& c) {
  return std::all_of(c.coeffs.begin(), c.coeffs.end(), [](const BigInt& a) { return a == 0; });
}

bool trivially_holds(const Constraint& c) {
  switch (c.rel) {
    case Rel::Ge: return c.constant >= 0;
    case Rel::Gt: return c.constant > 0;
    case Rel::Eq: return c.constant == 0;
  }
  return false;
}

bool same(const Constraint& a, const Constraint& b) {
  return a.rel == b.rel && a.constant == b.constant && a.coeffs == b.coeffs;
}

}  // namespace

Constraint homogeneous(const LatticeVector& normal, Rel rel) {
  Constraint c{std::vector<BigInt>(normal.rank()), 0, rel};
  for (std::size_t i = 0; i < normal.rank(); ++i) c.coeffs[i] = normal[i];
  return c;
}

Constraint shifted(const LatticeVector& normal, const LatticeVector& shift, Rel rel) {
  Constraint c = homogeneous(normal, rel);
  BigInt s = 0;
  for (std::size_t i = 0; i < normal.rank(); ++i) s += BigInt(normal[i]) * shift[i];
  c.constant = -s;
  return c;
}

bool feasible(System sys, std::size_t dim) {
  // Substitute equalities away first.
  for (;;) {
    auto eq = std::find_if(sys.begin(), sys.end(), [](const Constraint& c) { return c.rel == Rel::Eq; });
    if (eq == sys.end()) break;
    Constraint e = *eq;
    sys.erase(eq);
    auto pivot = std::find_if(e.coeffs.begin(), e.coeffs.end(), [](const BigInt& a) { return a != 0; });
    if (pivot == e.coeffs.end()) {
      if (e.constant != 0) return false;
      continue;
    }
    const std::size_t j = static_cast<std::size_t>(pivot - e.coeffs.begin());
    const BigInt ej = e.coeffs[j];
    const BigInt scale = abs(ej);
    for (auto& c : sys) {
      if (c.coeffs[j] == 0) continue;
      const BigInt cj = c.coeffs[j];
      for (std::size_t i = 0; i < dim; ++i) c.coeffs[i] = scale * c.coeffs[i] - sign(ej) * cj * e.coeffs[i];
      c.constant = scale * c.constant - sign(ej) * cj * e.constant;
      normalize(c);
    }
  }

  for (std::size_t var = 0; var < dim; ++var) {
    System pos, neg, rest;
    for (auto& c : sys) {
      if (all_zero(c)) {
        if (!trivially_holds(c)) return false;
        continue;
      }
      int s = sign(c.coeffs[var]);
      (s > 0 ? pos : s < 0 ? neg : rest).push_back(std::move(c));
    }
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        const BigInt pa = p.coeffs[var];
        const BigInt na = -n.coeffs[var];
        Constraint comb{std::vector<BigInt>(dim), na * p.constant + pa * n.constant,
                        (p.rel == Rel::Gt || n.rel == Rel::Gt) ? Rel::Gt : Rel::Ge};
        for (std::size_t i = 0; i < dim; ++i) comb.coeffs[i] = na * p.coeffs[i] + pa * n.coeffs[i];
        normalize(comb);
        if (all_zero(comb)) {
          if (!trivially_holds(comb)) return false;
          continue;
        }
        if (std::none_of(rest.begin(), rest.end(), [&](const Constraint& r) { return same(r, comb); })) {
          rest.push_back(std::move(comb));
        }
      }
    }
    sys = std::move(rest);
  }
  return std::all_of(sys.begin(), sys.end(), trivially_holds);
}

bool in_cone(const LatticeVector& p, std::span<const LatticeVector> gens) {
  if (p.is_zero()) return true;
  System sys;
  for (const auto& g : gens) sys.push_back(homogeneous(g, Rel::Ge));
  Constraint neg = homogeneous(p, Rel::Gt);
  for (auto& a : neg.coeffs) a = -a;
  sys.push_back(std::move(neg));
  return !feasible(std::move(sys), p.rank());
}

bool is_pointed(std::span<const LatticeVector> gens) {
  if (gens.empty()) return true;
  System sys;
  for (const auto& g : gens) sys.push_back(homogeneous(g, Rel::Gt));
  return feasible(std::move(sys), gens.front().rank());
}

std::vector<std::pair<std::size_t, std::size_t>> facet_pairs_3d(std::span<const LatticeVector> gens) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      LatticeVector n = cross(gens[i], gens[j]);
      if (n.is_zero()) continue;
      bool pos = false, neg = false;
      for (std::size_t k = 0; k < gens.size(); ++k) {
        if (k == i || k == j) continue;
        Int s = dot(n, gens[k]);
        pos |= s > 0;
        neg |= s < 0;
      }
      if (!(pos && neg)) out.emplace_back(i, j);
    }
  }
  return out;
}

System hrep_system(const ConeHRep& cone, const std::optional<LatticeVector>& shift) {
  System sys;
  for (const auto& m : cone.inequalities)
    sys.push_back(shift ? shifted(m, *shift, Rel::Ge) : homogeneous(m, Rel::Ge));
  for (const auto& l : cone.equalities)
    sys.push_back(shift ? shifted(l, *shift, Rel::Eq) : homogeneous(l, Rel::Eq));
  return sys;
}

namespace {

Constraint negated_strict(const LatticeVector& m) {
  Constraint c = homogeneous(m, Rel::Gt);
  for (auto& a : c.coeffs) a = -a;
  return c;
}

}  // namespace

bool region_covered(const System& region, std::span<const ConeHRep> cones, std::size_t dim) {
  std::vector<System> pieces;
  if (feasible(region, dim)) pieces.push_back(region);

  for (const auto& cone : cones) {
    if (pieces.empty()) break;
    std::vector<System> next;
    for (const auto& piece : pieces) {
      // piece \ cone as a disjoint union: the first violated constraint
      // determines the part.
      System acc = piece;
      auto emit = [&](Constraint extra) {
        System cand = acc;
        cand.push_back(std::move(extra));
        if (feasible(cand, dim)) next.push_back(std::move(cand));
      };
      bool alive = true;
      for (const auto& m : cone.inequalities) {
        emit(negated_strict(m));
        acc.push_back(homogeneous(m, Rel::Ge));
        if (!feasible(acc, dim)) {
          alive = false;
          break;
        }
      }
      for (std::size_t i = 0; alive && i < cone.equalities.size(); ++i) {
        const auto& l = cone.equalities[i];
        emit(homogeneous(l, Rel::Gt));
        emit(negated_strict(l));
        acc.push_back(homogeneous(l, Rel::Eq));
        if (!feasible(acc, dim)) alive = false;
      }
    }
    pieces = std::move(next);
  }
  return pieces.empty();
}

}  // namespace toricmot::detail
