#include <benchmark/benchmark.h>

#include "flipcube/flipdist.hpp"
#include "flipcube/generators.hpp"
#include "flipcube/quadgraph.hpp"
#include "flipcube/triangulation.hpp"

using namespace flipcube;

static void BM_PentagonDetectStrip(benchmark::State& state) {
  PointSet strip = lattice(static_cast<int>(state.range(0)) / 2, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(find_empty_pentagon(strip).has_value());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PentagonDetectStrip)
    ->RangeMultiplier(2)
    ->Range(128, 1024)
    ->Complexity();

static void BM_QuadGraphStrip(benchmark::State& state) {
  PointSet strip = lattice(static_cast<int>(state.range(0)) / 2, 2);
  for (auto _ : state) {
    QuadGraph qg = build_qg_pentagon_free(strip, false);
    benchmark::DoNotOptimize(qg.edges.size());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_QuadGraphStrip)
    ->RangeMultiplier(2)
    ->Range(128, 1024)
    ->Complexity();

static void BM_PentagonDetectRandom(benchmark::State& state) {
  PointSet ps = random_general_position(static_cast<int>(state.range(0)), 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(find_empty_pentagon(ps).has_value());
}
BENCHMARK(BM_PentagonDetectRandom)->Arg(16)->Arg(32)->Arg(64);

static void BM_DelaunayGrid(benchmark::State& state) {
  int side = static_cast<int>(state.range(0));
  PointSet g = lattice(side, side);
  for (auto _ : state) benchmark::DoNotOptimize(delaunay(g).edges().size());
}
BENCHMARK(BM_DelaunayGrid)->Arg(4)->Arg(6)->Arg(8);

static void BM_FlipGraphGrid3x3(benchmark::State& state) {
  PointSet g = lattice(3, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_flip_graph(g).vertices.size());
}
BENCHMARK(BM_FlipGraphGrid3x3);

static void BM_MatchingBoundGrid(benchmark::State& state) {
  PointSet g = lattice(3, 3);
  QuadGraph qg = build_qg_pentagon_free(g, false);
  Triangulation dt = delaunay(g);
  Triangulation t = dt;
  for (int i = 0; i < 5; ++i) t = apply_flip(t, flippable_edges(t).back());
  for (auto _ : state)
    benchmark::DoNotOptimize(matching_lower_bound(dt, t, qg));
}
BENCHMARK(BM_MatchingBoundGrid);

static void BM_PentagonFreeDistanceGrid(benchmark::State& state) {
  PointSet g = lattice(3, 3);
  Triangulation dt = delaunay(g);
  Triangulation t = dt;
  for (int i = 0; i < 5; ++i) t = apply_flip(t, flippable_edges(t).back());
  for (auto _ : state)
    benchmark::DoNotOptimize(flip_distance_pentagon_free(dt, t));
}
BENCHMARK(BM_PentagonFreeDistanceGrid);

BENCHMARK_MAIN();
