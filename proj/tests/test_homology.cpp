#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "generators.hpp"
#include "test_support.hpp"
#include "toricmot/homology.hpp"
#include "toricmot/resolution.hpp"

using namespace toricmot;

namespace {

GradedGroups graded(int top, std::initializer_list<std::pair<int, FGAbelianGroup>> parts) {
  GradedGroups h(top);
  for (const auto& [deg, g] : parts) h.set(deg, g);
  return h;
}

FGAbelianGroup z(Int r = 1) { return FGAbelianGroup::free(r); }

}  // namespace

TEST(Normalize, Examples) {
  const std::vector<Int> one{1}, twos{2, 2}, four_six{4, 6};
  EXPECT_EQ(FGAbelianGroup::normalize(1, one), z());
  EXPECT_EQ(FGAbelianGroup::normalize(0, twos).torsion(), (std::vector<Int>{2, 2}));
  EXPECT_EQ(FGAbelianGroup::normalize(0, four_six).torsion(), (std::vector<Int>{2, 12}));
  EXPECT_EQ(FGAbelianGroup::normalize(0, four_six).to_string(), "Z/2 + Z/12");
  EXPECT_EQ(FGAbelianGroup{}.to_string(), "0");
}

TEST(Normalize, Errors) {
  const std::vector<Int> bad{0}, neg{-3};
  EXPECT_TORIC_ERROR(FGAbelianGroup::normalize(0, bad), Errc::BadParameters);
  EXPECT_TORIC_ERROR(FGAbelianGroup::normalize(0, neg), Errc::BadParameters);
  EXPECT_TORIC_ERROR(FGAbelianGroup::normalize(-1, {}), Errc::NegativeRank);
}

TEST(Normalize, IdempotentAndOrderInsensitive) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<Int> c(1, 30);
  for (int i = 0; i < 300; ++i) {
    std::vector<Int> d(static_cast<std::size_t>(i % 5));
    for (auto& x : d) x = c(rng);
    const auto g = FGAbelianGroup::normalize(2, d);
    EXPECT_EQ(FGAbelianGroup::normalize(g.free_rank(), g.torsion()), g);
    std::shuffle(d.begin(), d.end(), rng);
    EXPECT_EQ(FGAbelianGroup::normalize(2, d), g);
    for (std::size_t j = 1; j < g.torsion().size(); ++j) EXPECT_EQ(g.torsion()[j] % g.torsion()[j - 1], 0);
    Int order = 1, expect = 1;
    for (Int t : g.torsion()) order *= t;
    for (Int x : d) expect *= x;
    EXPECT_EQ(order, expect);
  }
}

TEST(SurfaceHomology, CompleteFan) {
  FanProfile p;
  p.d = {1, 5, 5};
  p.span_dim = 2;
  p.is_complete = true;
  p.index_m = 3;
  const auto h = surface_bm_homology(p);
  const std::vector<Int> three{3};
  EXPECT_EQ(h, graded(4, {{0, z()}, {2, FGAbelianGroup::normalize(3, three)}, {4, z()}}));
}

TEST(SurfaceHomology, AffineCone) {
  for (Int m = 1; m <= 12; ++m) {
    const auto p = validate_fan(Fan(2, {{0, 1}, {m, -1}}, {Cone{0, 1}}));
    const auto h = surface_bm_homology(p);
    EXPECT_EQ(h.at(2), m == 1 ? FGAbelianGroup{} : FGAbelianGroup::cyclic(m));
    EXPECT_EQ(h.at(4), z());
    EXPECT_TRUE(h.at(0).is_zero());
    EXPECT_TRUE(h.at(1).is_zero());
    EXPECT_TRUE(h.at(3).is_zero());
  }
}

TEST(SurfaceHomology, QuasiprojectiveTwoCones) {
  for (Int k = 2; k <= 6; ++k) {
    for (Int d = 2; d <= 6; ++d) {
      const Fan f(2, {{k, 1}, {0, 1}, {-d, 1}}, {Cone{0, 1}, Cone{1, 2}});
      const auto p = validate_fan(f);
      EXPECT_EQ(p.d, (std::vector<std::size_t>{1, 3, 2}));
      const auto h = surface_bm_homology(p);
      const std::vector<Int> t{gcd(k, d)};
      EXPECT_EQ(h.at(2), FGAbelianGroup::normalize(1, t));
      EXPECT_EQ(h.at(4), z());
      EXPECT_TRUE(h.at(0).is_zero());
      EXPECT_TRUE(h.at(1).is_zero());
      EXPECT_TRUE(h.at(3).is_zero());
    }
  }
}

TEST(SurfaceHomology, OppositeQuadrants) {
  const auto p = validate_fan(Fan(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {Cone{0, 1}, Cone{2, 3}}));
  const auto h = surface_bm_homology(p);
  EXPECT_EQ(h.at(4), z());
  EXPECT_EQ(h.at(1), z());
  EXPECT_EQ(h.at(2), z(2));
  EXPECT_TRUE(h.at(3).is_zero());
}

TEST(CellularHomology, Examples) {
  const std::vector<Int> p1{1, 1}, blowup{0, 1, 1, 1}, hirz{1, 2, 1};
  EXPECT_EQ(cellular_bm_homology(p1), graded(2, {{0, z()}, {2, z()}}));
  EXPECT_EQ(cellular_bm_homology(blowup), graded(6, {{2, z()}, {4, z()}, {6, z()}}));
  EXPECT_EQ(cellular_bm_homology(hirz), graded(4, {{0, z()}, {2, z(2)}, {4, z()}}));
  const std::vector<Int> neg{1, -1};
  EXPECT_TORIC_ERROR(cellular_bm_homology(neg), Errc::BadParameters);
}

TEST(CellularHomology, AgreesWithSurfaceFormulaOnSmoothFans) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    const Fan f = resolve_fan_2d(gen::random_complete_fan(rng, 6, 4)).refined_fan;
    ASSERT_TRUE(is_smooth(f));
    const auto p = validate_fan(f);
    const Int r = static_cast<Int>(f.rays().size());
    const std::vector<Int> counts{1, r - 2, 1};
    EXPECT_EQ(surface_bm_homology(p), cellular_bm_homology(counts));
    Int total = 0;
    const auto h = surface_bm_homology(p);
    for (const auto& [deg, g] : h.by_degree()) total += g.free_rank();
    EXPECT_EQ(total, static_cast<Int>(p.d[2]));
  }
}

TEST(TreeHomology, Examples) {
  EXPECT_EQ(tree_exceptional_homology(ExceptionalModel{3, 5, {1, 1, 3}}), graded(2, {{0, z(3)}, {2, z(5)}}));
  EXPECT_EQ(tree_exceptional_homology(ExceptionalModel{1, 1, {1}}), graded(2, {{0, z()}, {2, z()}}));
  EXPECT_TRUE(tree_exceptional_homology(ExceptionalModel{}).by_degree().empty());
}

TEST(CurveHomology, Examples) {
  const std::vector<Int> cusp{1}, node{2}, amp{2, 2, 2}, bad{0};
  EXPECT_EQ(curve_homology(cusp), graded(2, {{0, z()}, {2, z()}}));
  EXPECT_EQ(curve_homology(node), graded(2, {{0, z()}, {1, z()}, {2, z()}}));
  EXPECT_EQ(curve_homology(amp), graded(2, {{0, z()}, {1, z(3)}, {2, z()}}));
  EXPECT_TORIC_ERROR(curve_homology(bad), Errc::BadBranchCount);
}

TEST(GradedGroups, SparseEquality) {
  GradedGroups a(4), b(4);
  a.set(2, FGAbelianGroup{});
  EXPECT_EQ(a, b);
  a.set(2, z());
  EXPECT_NE(a, b);
  EXPECT_TORIC_ERROR(a.set(5, z()), Errc::BadParameters);
  EXPECT_EQ(a.to_string(), "H2=Z");
}
