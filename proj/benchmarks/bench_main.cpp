#include <benchmark/benchmark.h>

#include <random>

#include "toricmot/cellularity.hpp"
#include "toricmot/pipeline.hpp"
#include "toricmot/resolution.hpp"

using namespace toricmot;

namespace {

Fan index_two() { return Fan(2, {{0, 1}, {-2, -1}, {2, -1}}, {Cone{0, 1}, Cone{1, 2}, Cone{0, 2}}); }

Fan polygon_fan(Int n) {
  // (0,-1), then (1,0) .. (1,n-1), then (0,1) and (-1,0)
  std::vector<LatticeVector> rays{{0, -1}};
  for (Int i = 0; i < n; ++i) rays.push_back({1, i});
  rays.push_back({0, 1});
  rays.push_back({-1, 0});
  std::vector<Cone> cones;
  for (std::size_t i = 0; i < rays.size(); ++i) cones.push_back(Cone{i, (i + 1) % rays.size()});
  return Fan(2, rays, cones);
}

}  // namespace

static void BM_ResolveCone(benchmark::State& state) {
  const Int d = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(resolve_cone_2d({1, 0}, {d - 1, d}));
}
BENCHMARK(BM_ResolveCone)->Arg(7)->Arg(101)->Arg(10007);

static void BM_HilbertBasis2D(benchmark::State& state) {
  const Int d = state.range(0);
  const std::vector<LatticeVector> gens{{1, 0}, {1, d}};
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_basis(gens));
}
BENCHMARK(BM_HilbertBasis2D)->Arg(5)->Arg(50)->Arg(200);

static void BM_HilbertBasis3D(benchmark::State& state) {
  const std::vector<LatticeVector> gens{{1, 1, 1}, {-1, 1, 1}, {1, 1, -1}, {-1, 1, -1}};
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_basis(gens));
}
BENCHMARK(BM_HilbertBasis3D);

static void BM_Completeness(benchmark::State& state) {
  const Fan f = polygon_fan(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(is_complete(f));
}
BENCHMARK(BM_Completeness)->Arg(4)->Arg(16)->Arg(64);

static void BM_ValidateFan(benchmark::State& state) {
  const Fan f = polygon_fan(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(validate_fan(f));
}
BENCHMARK(BM_ValidateFan)->Arg(4)->Arg(16)->Arg(64);

static void BM_SurfacePipeline(benchmark::State& state) {
  const Fan f = index_two();
  for (auto _ : state) benchmark::DoNotOptimize(toric_surface_motive(f));
}
BENCHMARK(BM_SurfacePipeline);

static void BM_RegularVectorSearch(benchmark::State& state) {
  const Fan quadric(3, {{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}}, {Cone{0, 1, 3}, Cone{0, 2, 3}});
  for (auto _ : state) benchmark::DoNotOptimize(regular_vector_search(quadric, 4));
}
BENCHMARK(BM_RegularVectorSearch);

static void BM_StarShapedNoVector(benchmark::State& state) {
  const Fan f(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {Cone{0, 1}, Cone{2, 3}});
  for (auto _ : state) benchmark::DoNotOptimize(regular_vector_search(f, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_StarShapedNoVector)->Arg(2)->Arg(4);
BENCHMARK_MAIN();
