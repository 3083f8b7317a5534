#include "cvxloc_tools/bench.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "cvxloc/baseline.hpp"
#include "cvxloc/cubemap.hpp"
#include "cvxloc/generators.hpp"
#include "cvxloc/polar.hpp"

namespace cvxloc::tools {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::array<std::string_view, 5> kMethods2d{"linear", "wedge", "slabs-sorted",
                                                     "slabs-uniform", "polar"};
constexpr std::array<std::string_view, 2> kMethods3d{"linear", "cubemap"};

volatile unsigned g_sink = 0;

std::int64_t nanos(Clock::duration d) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(d).count();
}

template <class T>
T median(std::vector<T> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return values[n / 2 - 1] + (values[n / 2] - values[n / 2 - 1]) / 2;
}

// Nearest-rank percentile.
double percentile(std::vector<double> values, double q) {
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  const auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(values.size())));
  return values[std::clamp<std::size_t>(rank, 1, values.size()) - 1];
}

template <class Point, class Build, class Locate>
auto time_method(std::span<const Point> queries, const BenchOptions& options, Build build,
                 Locate locate, BenchRecord& record) {
  using Index = std::invoke_result_t<Build>;
  if (options.reps == 0) throw std::invalid_argument("repetitions must be positive");

  std::optional<Index> index;
  std::vector<std::int64_t> builds;
  std::vector<double> means;
  std::vector<double> p99s;
  std::vector<double> chunk_ns;
  unsigned sink = 0;
  for (std::size_t rep = 0; rep < options.warmup + options.reps; ++rep) {
    index.reset();
    const auto t0 = Clock::now();
    index.emplace(build());
    const auto t1 = Clock::now();

    chunk_ns.clear();
    std::int64_t total = 0;
    for (std::size_t begin = 0; begin < queries.size(); begin += kChunk) {
      const std::size_t end = std::min(begin + kChunk, queries.size());
      const auto c0 = Clock::now();
      for (std::size_t k = begin; k < end; ++k) {
        sink += static_cast<unsigned>(locate(*index, queries[k]));
      }
      const std::int64_t ns = nanos(Clock::now() - c0);
      total += ns;
      chunk_ns.push_back(static_cast<double>(ns) / static_cast<double>(end - begin));
    }
    if (rep < options.warmup) continue;
    builds.push_back(nanos(t1 - t0));
    means.push_back(queries.empty() ? 0 : static_cast<double>(total) / queries.size());
    p99s.push_back(percentile(chunk_ns, 0.99));
  }
  g_sink = sink;

  record.m = queries.size();
  record.build_ns = median(builds);
  record.mean_query_ns = median(means);
  record.p99_query_ns = median(p99s);
  return std::move(*index);
}

template <class Shape, class Point, class Index, class Locate>
std::size_t count_mismatches(const Shape& shape, std::span<const Point> queries,
                             const Index& index, Locate locate) {
  const Scalar eps_q = shape.tolerances().eps_q;
  std::size_t mismatches = 0;
  for (const Point& q : queries) {
    const Scalar oracle = min_signed_distance(shape, q);
    if (std::abs(oracle) <= 2 * eps_q) continue;
    if (locate(index, q) != classify(oracle, eps_q)) ++mismatches;
  }
  return mismatches;
}

template <class Shape, class Point, class Build, class Locate, class Occupancy>
BenchRecord run(std::string_view method, const Shape& shape, std::span<const Point> queries,
                const BenchOptions& options, Build build, Locate locate, Occupancy occupancy) {
  BenchRecord record;
  record.method = std::string(method);
  record.n = shape.size();
  const auto index = time_method(queries, options, build, locate, record);
  record.max_occupancy = occupancy(index);
  if (options.count_mismatches) record.mismatches = count_mismatches(shape, queries, index, locate);
  return record;
}

std::size_t wedge_bound(std::size_t n) {
  return static_cast<std::size_t>(std::bit_width(n - 2)) + 2;  // ceil(log2(n - 1)) + 2
}

}  // namespace

bool is_method_2d(std::string_view method) {
  return std::find(kMethods2d.begin(), kMethods2d.end(), method) != kMethods2d.end();
}

bool is_method_3d(std::string_view method) {
  return std::find(kMethods3d.begin(), kMethods3d.end(), method) != kMethods3d.end();
}

BenchRecord bench_polygon(std::string_view method, const ConvexPolygon& polygon,
                          std::span<const Point2> queries, const BenchOptions& options) {
  if (method == "linear") {
    return run(
        method, polygon, queries, options, [&] { return &polygon; },
        [](const ConvexPolygon* poly, Point2 p) { return locate_linear_2d(*poly, p); },
        [](const ConvexPolygon* poly) { return poly->size(); });
  }
  if (method == "wedge") {
    return run(
        method, polygon, queries, options, [&] { return WedgeIndex2::build(polygon); },
        [](const WedgeIndex2& idx, Point2 p) { return idx.locate(p); },
        [](const WedgeIndex2& idx) { return wedge_bound(idx.size()); });
  }
  if (method == "slabs-sorted") {
    return run(
        method, polygon, queries, options, [&] { return SortedSlabIndex2::build(polygon); },
        [](const SortedSlabIndex2& idx, Point2 p) { return idx.locate(p); },
        [](const SortedSlabIndex2&) { return std::size_t{3}; });
  }
  if (method == "slabs-uniform") {
    return run(
        method, polygon, queries, options,
        [&] { return UniformSlabIndex2::build(polygon, options.n_slabs); },
        [](const UniformSlabIndex2& idx, Point2 p) { return idx.locate(p); },
        [](const UniformSlabIndex2& idx) { return idx.max_occupancy(); });
  }
  if (method == "polar") {
    return run(
        method, polygon, queries, options,
        [&] { return PolarIndex2::build(polygon, {options.n_slabs, std::nullopt}); },
        [](const PolarIndex2& idx, Point2 p) { return idx.locate(p); },
        [](const PolarIndex2& idx) { return idx.max_occupancy(); });
  }
  throw std::invalid_argument("method '" + std::string(method) + "' does not apply to polygons");
}

BenchRecord bench_polyhedron(std::string_view method, const ConvexPolyhedron& polyhedron,
                             std::span<const Point3> queries, const BenchOptions& options) {
  if (method == "linear") {
    return run(
        method, polyhedron, queries, options, [&] { return &polyhedron; },
        [](const ConvexPolyhedron* poly, Point3 p) { return locate_linear_3d(*poly, p); },
        [](const ConvexPolyhedron* poly) { return poly->size(); });
  }
  if (method == "cubemap") {
    return run(
        method, polyhedron, queries, options,
        [&] { return CubeMapIndex3::build(polyhedron, {options.resolution, std::nullopt}); },
        [](const CubeMapIndex3& idx, Point3 p) { return idx.locate(p); },
        [](const CubeMapIndex3& idx) { return idx.max_occupancy(); });
  }
  throw std::invalid_argument("method '" + std::string(method) +
                              "' does not apply to polyhedra");
}

ConvexPolygon bench_shape_2d(std::size_t n, std::uint64_t seed) {
  GenSpec2 spec;
  spec.n = n;
  spec.seed = seed;
  spec.semi_axis_a = 1;
  spec.semi_axis_b = 0.6;
  spec.rotation = 0.3;
  return gen_convex_polygon(spec);
}

ConvexPolyhedron bench_shape_3d(int level, std::uint64_t seed) {
  return gen_convex_polyhedron({level, seed, std::nullopt});
}

void write_csv_row(std::ostream& out, const BenchRecord& r) {
  char buf[64];
  out << r.method << ',' << r.n << ',' << r.m << ',' << r.build_ns << ',';
  std::snprintf(buf, sizeof buf, "%.3f,%.3f", r.mean_query_ns, r.p99_query_ns);
  out << buf << ',' << r.max_occupancy << ',' << r.mismatches << '\n';
}

}  // namespace cvxloc::tools
