#pragma once

// Timing harness behind `cvxloc bench`.
//
// Each repetition builds the index and then classifies the whole query batch,
// timing chunks of kChunk queries. A repetition yields build_ns, the mean
// per-query time over the batch and the 99th percentile of the per-chunk
// means; the record holds the median of each over the repetitions. Query
// points are supplied by the caller, so generation and I/O stay outside the
// timed region.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "cvxloc/shapes.hpp"

namespace cvxloc::tools {

inline constexpr std::string_view kCsvHeader =
    "method,N,M,build_ns,mean_query_ns,p99_query_ns,max_occupancy,mismatches";

struct BenchRecord {
  std::string method;
  std::size_t n = 0;  // edges or faces
  std::size_t m = 0;  // queries
  std::int64_t build_ns = 0;
  double mean_query_ns = 0;
  double p99_query_ns = 0;
  // Most candidates a single query may evaluate (the wedge bound for wedge,
  // N for linear).
  std::size_t max_occupancy = 0;
  // Disagreements with the linear scan outside the 2*eps_q band.
  std::size_t mismatches = 0;
};

struct BenchOptions {
  std::size_t reps = 5;
  std::size_t warmup = 1;
  std::optional<std::size_t> n_slabs;        // polar, slabs-uniform
  std::optional<std::uint32_t> resolution;   // cubemap
  // Checks every answer against the linear scan after timing; costs O(N M).
  bool count_mismatches = true;
};

inline constexpr std::size_t kChunk = 128;

bool is_method_2d(std::string_view method);
bool is_method_3d(std::string_view method);

/// Throws std::invalid_argument for an unknown or 3D-only method.
BenchRecord bench_polygon(std::string_view method, const ConvexPolygon& polygon,
                          std::span<const Point2> queries, const BenchOptions& options);
/// Throws std::invalid_argument for an unknown or 2D-only method.
BenchRecord bench_polyhedron(std::string_view method, const ConvexPolyhedron& polyhedron,
                             std::span<const Point3> queries, const BenchOptions& options);

/// Shapes swept by `cvxloc bench`: an ellipse with axes 1 and 0.6 rotated by
/// 0.3 rad, and an icosphere under random_affine(seed).
ConvexPolygon bench_shape_2d(std::size_t n, std::uint64_t seed);
ConvexPolyhedron bench_shape_3d(int level, std::uint64_t seed);

void write_csv_row(std::ostream& out, const BenchRecord& record);

}  // namespace cvxloc::tools
