#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "io.hpp"
#include "test_support.hpp"

using namespace toricmot;
using toricmot::testing::fixture;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fan(const std::string& name) { return fixture("fans/" + name + ".json"); }

json golden() {
  std::ifstream in(fixture("golden.json"));
  return json::parse(in);
}

}  // namespace

TEST(Cli, GoldenCorpus) {
  for (const auto& g : golden()) {
    std::vector<std::string> args{"--json", g.at("command").get<std::string>(), fan(g.at("fan").get<std::string>())};
    if (g.contains("homology"))
      args.insert(args.end(), {"--homology", fixture("homology/" + g.at("homology").get<std::string>() + ".json")});
    if (g.contains("bound")) args.insert(args.end(), {"--bound", std::to_string(g.at("bound").get<int>())});
    const auto r = run(args);
    const std::string label = g.dump();
    EXPECT_EQ(r.code, g.at("exit").get<int>()) << label << "\n" << r.out << r.err;
    if (r.code == 2) continue;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j.at("exit_code").get<int>(), r.code) << label;
    if (g.contains("motive")) { EXPECT_EQ(j.at("motive").at("text"), g.at("motive")) << label; }
    if (g.contains("status")) { EXPECT_EQ(j.at("status"), g.at("status")) << label; }
    if (g.contains("reason")) { EXPECT_EQ(j.at("certificate").at("reason"), g.at("reason")) << label; }
    if (g.contains("search_reason")) {
      EXPECT_EQ(j.at("regular_vector_search").at("reason"), g.at("search_reason")) << label;
    }
    if (g.contains("added")) { EXPECT_EQ(j.at("added_rays").size(), g.at("added").get<std::size_t>()) << label; }
  }
}

TEST(Cli, MotiveJsonRoundTrip) {
  for (const char* name : {"index2", "weighted_p112", "affine_cone_7", "quasiprojective_4_6"}) {
    const auto r = run({"--json", "motive", fan(name)});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    const Motive m = cli::motive_from_json(j.at("motive"));
    EXPECT_EQ(m.to_string(), j.at("motive").at("text").get<std::string>());
    EXPECT_EQ(cli::motive_to_json(m), j.at("motive"));
    EXPECT_EQ(cli::motive_from_json(j.at("motive").at("summands")), m);
    EXPECT_EQ(Motive::parse(m.to_string()), m);
  }
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args{"--json",          "motive",          fan("index2"), fan("weighted_p113"),
                                      fan("affine_cone_5"), fan("quasiprojective_2_2")};
  const auto first = run(args);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(run(args).out, first.out);
  const auto arr = json::parse(first.out);
  ASSERT_TRUE(arr.is_array());
  ASSERT_EQ(arr.size(), 4u);
  EXPECT_EQ(arr[0].at("file"), fan("index2"));
  EXPECT_EQ(arr[3].at("file"), fan("quasiprojective_2_2"));
}

TEST(Cli, ExitCodeIsWorstOverFiles) {
  EXPECT_EQ(run({"fan-check", fan("index2"), fan("malformed_line")}).code, 2);
  EXPECT_EQ(run({"motive", fan("index2"), fan("opposite_quadrants")}).code, 4);
}

TEST(Cli, Curve) {
  const auto r = run({"curve", "--branches", "2,2,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Z + Z^3[1] + Z{1}"), std::string::npos);
  EXPECT_EQ(run({"curve", "--branches", "1"}).code, 0);
  EXPECT_EQ(run({"curve", "--branches", "0"}).code, 2);
  EXPECT_EQ(run({"curve", "--branches", "x"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"motive"}).code, 1);
}

TEST(Cli, MissingFileAndRankThreeWithoutHomology) {
  EXPECT_EQ(run({"fan-check", fixture("fans/does_not_exist.json")}).code, 2);
  EXPECT_EQ(run({"motive", fan("cube")}).code, 1);
}

TEST(Cli, FanCheckCyclicSingularLocusListsFivePairs) {
  const auto j = json::parse(run({"--json", "fan-check", fan("cyclic_singular_locus")}).out);
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& c : j.at("minimal_singular_cones")) {
    const auto idx = c.at("indices").get<std::vector<std::size_t>>();
    ASSERT_EQ(idx.size(), 2u);
    pairs.insert({idx[0], idx[1]});
  }
  const std::set<std::pair<std::size_t, std::size_t>> expect{{0, 1}, {0, 3}, {1, 4}, {2, 5}, {3, 4}};
  EXPECT_EQ(pairs, expect);
}

TEST(Io, RejectsFloatsAndBadShapes) {
  EXPECT_TORIC_ERROR(cli::parse_fan_file(json::parse(R"({"rank":2,"rays":[[1.0,0],[0,1]],"cones":[[0,1]]})")),
                     Errc::ParseError);
  EXPECT_TORIC_ERROR(cli::parse_fan_file(json::parse(R"({"rank":4,"rays":[[1,0,0,0]],"cones":[[0]]})")),
                     Errc::RankMismatch);
  EXPECT_TORIC_ERROR(cli::parse_fan_file(json::parse(R"({"rank":2,"rays":[[1,0]]})")), Errc::ParseError);
  EXPECT_TORIC_ERROR(cli::parse_homology(json::parse(R"({"top_degree":4,"groups":[{"degree":2,"free_rank":0.5}]})")),
                     Errc::ParseError);
}

TEST(Io, FanRoundTrip) {
  const auto ff = toricmot::testing::fan_fixture("cube");
  const auto j = cli::fan_to_json(ff.fan);
  const auto again = cli::parse_fan_file(j);
  EXPECT_EQ(again.fan.rays(), ff.fan.rays());
  EXPECT_EQ(again.fan.max_cones(), ff.fan.max_cones());
  const auto h = toricmot::testing::homology_fixture("cube");
  EXPECT_EQ(cli::parse_homology(cli::homology_to_json(h)), h);
}
