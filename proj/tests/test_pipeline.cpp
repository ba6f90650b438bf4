#include <gtest/gtest.h>

#include "test_support.hpp"
#include "toricmot/pipeline.hpp"

using namespace toricmot;
using toricmot::testing::fan_fixture;
using toricmot::testing::homology_fixture;

namespace {

CellularityOptions from_file(const cli::FanFile& ff) {
  CellularityOptions o;
  o.quasiprojective = ff.quasiprojective;
  return o;
}

ThreefoldMotiveReport run3(const std::string& fan, const std::string& homology) {
  const auto ff = fan_fixture(fan);
  return threefold_motive(ff.fan, homology_fixture(homology), ff.refinement, from_file(ff));
}

}  // namespace

TEST(SurfacePipeline, WeightedProjectivePlanes) {
  for (const char* name : {"weighted_p112", "weighted_p113", "weighted_p115"}) {
    const auto r = toric_surface_motive(fan_fixture(name).fan);
    EXPECT_EQ(r.motive.to_string(), "Z + Z{1} + Z{2}") << name;
    EXPECT_TRUE(r.pure_tate);
    EXPECT_TRUE(r.complete);
    ASSERT_TRUE(r.resolution.has_value());
    EXPECT_EQ(r.resolution->added_rays.size(), 1u);
    EXPECT_TRUE(r.certificate.cellular());
  }
}

TEST(SurfacePipeline, IndexTwo) {
  const auto r = toric_surface_motive(fan_fixture("index2").fan);
  EXPECT_EQ(r.motive.to_string(), "Z + Z{1} + Z/2{1} + Z{2}");
  EXPECT_FALSE(r.pure_tate);
  const auto c = surface_cofiber(r);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->source.to_string(), "Z^3 + Z^5{1}");
  EXPECT_EQ(c->target.to_string(), "Z^4 + Z^6{1} + Z{2}");
}

TEST(SurfacePipeline, AffineCones) {
  for (Int m = 1; m <= 20; ++m) {
    const auto r = toric_surface_motive(Fan(2, {{0, 1}, {m, -1}}, {Cone{0, 1}}));
    const std::string expect = m == 1 ? "Z{2}" : "Z/" + std::to_string(m) + "{1} + Z{2}";
    EXPECT_EQ(r.motive.to_string(), expect);
    EXPECT_FALSE(surface_cofiber(r).has_value());
  }
  EXPECT_EQ(toric_surface_motive(fan_fixture("rational_normal_cone_3").fan).motive.to_string(), "Z/3{1} + Z{2}");
}

TEST(SurfacePipeline, QuasiprojectiveTwoSingularities) {
  for (Int k = 2; k <= 6; ++k) {
    for (Int d = 2; d <= 6; ++d) {
      const Fan f(2, {{k, 1}, {0, 1}, {-d, 1}}, {Cone{0, 1}, Cone{1, 2}});
      const auto r = toric_surface_motive(f);
      const Int g = gcd(k, d);
      const std::string expect = g == 1 ? "Z{1} + Z{2}" : "Z{1} + Z/" + std::to_string(g) + "{1} + Z{2}";
      EXPECT_EQ(r.motive.to_string(), expect) << k << "," << d;
    }
  }
}

TEST(SurfacePipeline, NotCertifiedThrows) {
  EXPECT_TORIC_ERROR(toric_surface_motive(fan_fixture("opposite_quadrants").fan), Errc::CellularityNotCertified);
}

TEST(SurfacePipeline, DegenerateFanIsNotCertified) {
  const Fan f(2, {{1, 0}, {-1, 0}}, {Cone{0}, Cone{1}});
  EXPECT_TRUE(validate_fan(f).degenerate(2));
  EXPECT_TORIC_ERROR(toric_surface_motive(f), Errc::CellularityNotCertified);
}

TEST(Refinement, Checks) {
  const auto ff = fan_fixture("quadric_cone");
  ASSERT_TRUE(ff.refinement.has_value());
  EXPECT_NO_THROW(check_refinement(ff.fan, *ff.refinement));
  const Fan other(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {Cone{0, 1, 2}});
  EXPECT_TORIC_ERROR(check_refinement(ff.fan, other), Errc::NotARefinement);
}

TEST(ThreefoldPipeline, GoldenMotives) {
  EXPECT_EQ(run3("quadric_cone", "quadric_cone").motive->to_string(), "Z{1}[1] + Z{2} + Z{3}");
  EXPECT_EQ(run3("product_cone", "product_cone").motive->to_string(), "Z/2{2} + Z{3}");
  EXPECT_EQ(run3("cube", "cube").motive->to_string(), "Z + Z{1} + Z^2{1}[1] + Z^5{2} + Z{3}");
  for (const char* f : {"weighted_p1112", "weighted_p1113"}) {
    const auto r = run3(f, "projective_space_3");
    EXPECT_EQ(r.status, MotiveStatus::Determined);
    EXPECT_EQ(r.motive->to_string(), "Z + Z{1} + Z{2} + Z{3}");
  }
}

TEST(ThreefoldPipeline, RecordsAssumptionsForSingularInput) {
  const auto r = run3("quadric_cone", "quadric_cone");
  EXPECT_EQ(r.status, MotiveStatus::Determined);
  ASSERT_TRUE(r.certificate.has_value());
  EXPECT_TRUE(r.certificate->cellular());
  EXPECT_FALSE(r.assumptions.empty());
}

TEST(ThreefoldPipeline, CyclicSingularLocusIsUndetermined) {
  const auto r = run3("cyclic_singular_locus", "cyclic_singular_locus");
  EXPECT_EQ(r.status, MotiveStatus::Undetermined);
  EXPECT_EQ(r.violated_index, 1);
  EXPECT_FALSE(r.motive.has_value());
  EXPECT_EQ(r.minimal_singular.size(), 5u);
  EXPECT_EQ(r.singular_curves.first_betti, 1u);
}

TEST(ThreefoldPipeline, SingularWithoutRefinementIsNotCertified) {
  const auto ff = fan_fixture("quadric_cone");
  const auto r = threefold_motive(ff.fan, homology_fixture("quadric_cone"), std::nullopt, from_file(ff));
  EXPECT_EQ(r.status, MotiveStatus::NotCertified);
  EXPECT_FALSE(r.motive.has_value());
}

TEST(ThreefoldPipeline, RejectsWrongHomologyDegree) {
  const auto ff = fan_fixture("cube");
  EXPECT_TORIC_ERROR(threefold_motive(ff.fan, GradedGroups(4), ff.refinement), Errc::BadParameters);
}

TEST(StatusNames, Stable) {
  EXPECT_EQ(motive_status_name(MotiveStatus::Undetermined), "undetermined");
  EXPECT_EQ(motive_status_name(MotiveStatus::NotCertified), "not-certified");
  EXPECT_EQ(status_name(CellularityStatus::Cellular), "Cellular");
}
