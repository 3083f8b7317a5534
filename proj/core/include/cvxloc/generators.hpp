#pragma once

// Deterministic shape and query generators.
//
// All randomness comes from std::mt19937_64. Reals are formed from the top
// 53 bits of each draw, so corpora are bit-reproducible across toolchains.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "cvxloc/shapes.hpp"

namespace cvxloc {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  Scalar uniform() { return static_cast<Scalar>(engine_() >> 11) * 0x1.0p-53; }
  Scalar uniform(Scalar lo, Scalar hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

struct GenSpec2 {
  std::size_t n = 8;
  std::uint64_t seed = 0;
  Scalar semi_axis_a = 1;
  Scalar semi_axis_b = 1;
  Scalar rotation = 0;  // radians
  // Evenly spaced angles starting at 0, ignoring the seed.
  bool regular = false;
};

struct Affine3 {
  std::array<std::array<Scalar, 3>, 3> linear{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  Point3 translation{};

  static Affine3 identity() { return {}; }
  Scalar determinant() const;
  Point3 apply(Point3 p) const;
};

/// Random rotation composed with axis scales in [0.5, 2] and a translation in
/// [-1, 1]^3. Determinant is always positive.
Affine3 random_affine(std::uint64_t seed);

struct GenSpec3 {
  int level = 0;  // icosphere subdivision level, 0..5
  std::uint64_t seed = 0;
  // Applied to the unit icosphere; random_affine(seed) when absent.
  std::optional<Affine3> affine = Affine3::identity();
};

struct QuerySpec {
  std::size_t m = 1000;
  std::uint64_t seed = 0;
  Scalar inflation = 1.5;  // box scale about its center, >= 1
};

/// Points on the ellipse (a cos t, b sin t), rotated, at n stratified random
/// angles t_i = phase + 2*pi/n * (i + 0.9 u_i). Consecutive angles differ by
/// at least 0.1 * 2*pi/n, so edges never degenerate.
ConvexPolygon gen_convex_polygon(const GenSpec2& spec);

/// Icosahedron subdivided `level` times and projected to the unit sphere,
/// then mapped by the affine transform. Has 20 * 4^level faces.
ConvexPolyhedron gen_convex_polyhedron(const GenSpec3& spec);

std::vector<Point2> gen_query_points(const Aabb2& box, const QuerySpec& spec);
std::vector<Point3> gen_query_points(const Aabb3& box, const QuerySpec& spec);

/// Verification corpus: 25 ellipses for each N in {8, 64, 512, 4096}, with
/// minor/major axis ratio in [0.25, 1] and random rotation.
std::vector<GenSpec2> default_polygon_corpus();
/// Icosphere levels 0..3, 20 random affine seeds each.
std::vector<GenSpec3> default_polyhedron_corpus();

}  // namespace cvxloc
