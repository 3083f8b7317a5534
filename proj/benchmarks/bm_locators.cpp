#include <benchmark/benchmark.h>

#include "cvxloc/baseline.hpp"
#include "cvxloc/cubemap.hpp"
#include "cvxloc/generators.hpp"
#include "cvxloc/polar.hpp"

using namespace cvxloc;

namespace {

ConvexPolygon ellipse(std::size_t n) { return gen_convex_polygon({n, 1, 1, 0.6, 0.3, false}); }

template <class Locate>
void query_loop(benchmark::State& state, const std::vector<Point2>& pts, Locate locate) {
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(locate(pts[k]));
    if (++k == pts.size()) k = 0;
  }
}

void BM_Linear2D(benchmark::State& state) {
  const auto poly = ellipse(static_cast<std::size_t>(state.range(0)));
  const auto pts = gen_query_points(poly.aabb(), {4096, 2, 1.5});
  query_loop(state, pts, [&](Point2 p) { return locate_linear_2d(poly, p); });
}

void BM_Wedge(benchmark::State& state) {
  const auto poly = ellipse(static_cast<std::size_t>(state.range(0)));
  const auto idx = build_wedge_index(poly);
  const auto pts = gen_query_points(poly.aabb(), {4096, 2, 1.5});
  query_loop(state, pts, [&](Point2 p) { return idx.locate(p); });
}

void BM_SortedSlabs(benchmark::State& state) {
  const auto poly = ellipse(static_cast<std::size_t>(state.range(0)));
  const auto idx = build_sorted_slabs(poly);
  const auto pts = gen_query_points(poly.aabb(), {4096, 2, 1.5});
  query_loop(state, pts, [&](Point2 p) { return idx.locate(p); });
}

void BM_UniformSlabs(benchmark::State& state) {
  const auto poly = ellipse(static_cast<std::size_t>(state.range(0)));
  const auto idx = build_uniform_slabs(poly);
  const auto pts = gen_query_points(poly.aabb(), {4096, 2, 1.5});
  query_loop(state, pts, [&](Point2 p) { return idx.locate(p); });
}

void BM_Polar(benchmark::State& state) {
  const auto poly = ellipse(static_cast<std::size_t>(state.range(0)));
  const auto idx = build_polar_index(poly);
  const auto pts = gen_query_points(poly.aabb(), {1 << 16, 2, 1.5});
  query_loop(state, pts, [&](Point2 p) { return idx.locate(p); });
}

void BM_PolarBuild(benchmark::State& state) {
  const auto poly = ellipse(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_polar_index(poly, 4 * poly.size()));
  state.SetComplexityN(state.range(0));
}

void BM_CubeMap(benchmark::State& state) {
  const auto poly = gen_convex_polyhedron({static_cast<int>(state.range(0)), 1, std::nullopt});
  const auto idx = build_cubemap_index(poly);
  const auto pts = gen_query_points(poly.aabb(), {1 << 16, 2, 1.5});
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(idx.locate(pts[k]));
    if (++k == pts.size()) k = 0;
  }
}

void BM_Linear3D(benchmark::State& state) {
  const auto poly = gen_convex_polyhedron({static_cast<int>(state.range(0)), 1, std::nullopt});
  const auto pts = gen_query_points(poly.aabb(), {4096, 2, 1.5});
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(locate_linear_3d(poly, pts[k]));
    if (++k == pts.size()) k = 0;
  }
}

}  // namespace

BENCHMARK(BM_Linear2D)->RangeMultiplier(8)->Range(64, 65536);
BENCHMARK(BM_Wedge)->RangeMultiplier(8)->Range(64, 65536);
BENCHMARK(BM_SortedSlabs)->RangeMultiplier(8)->Range(64, 65536);
BENCHMARK(BM_UniformSlabs)->RangeMultiplier(8)->Range(64, 65536);
BENCHMARK(BM_Polar)->RangeMultiplier(8)->Range(64, 65536);
BENCHMARK(BM_PolarBuild)->RangeMultiplier(4)->Range(512, 16384)->Complexity(benchmark::oN);
BENCHMARK(BM_CubeMap)->DenseRange(0, 4);
BENCHMARK(BM_Linear3D)->DenseRange(0, 4);
BENCHMARK_MAIN();
