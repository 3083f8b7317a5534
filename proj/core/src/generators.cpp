#include "cvxloc/generators.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <utility>

namespace cvxloc {

Scalar Affine3::determinant() const {
  const auto& m = linear;
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Point3 Affine3::apply(Point3 p) const {
  const auto& m = linear;
  return {m[0][0] * p.x + m[0][1] * p.y + m[0][2] * p.z + translation.x,
          m[1][0] * p.x + m[1][1] * p.y + m[1][2] * p.z + translation.y,
          m[2][0] * p.x + m[2][1] * p.y + m[2][2] * p.z + translation.z};
}

Affine3 random_affine(std::uint64_t seed) {
  Rng rng(seed);
  // Uniform random unit quaternion (Shoemake).
  const Scalar u1 = rng.uniform();
  const Scalar u2 = 2 * std::numbers::pi * rng.uniform();
  const Scalar u3 = 2 * std::numbers::pi * rng.uniform();
  const Scalar w = std::sqrt(1 - u1) * std::sin(u2);
  const Scalar x = std::sqrt(1 - u1) * std::cos(u2);
  const Scalar y = std::sqrt(u1) * std::sin(u3);
  const Scalar z = std::sqrt(u1) * std::cos(u3);
  const std::array<std::array<Scalar, 3>, 3> rot{{
      {1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w)},
      {2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w)},
      {2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)},
  }};
  const std::array<Scalar, 3> scale{rng.uniform(0.5, 2), rng.uniform(0.5, 2), rng.uniform(0.5, 2)};

  Affine3 a;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) a.linear[r][c] = rot[r][c] * scale[c];
  }
  a.translation = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
  return a;
}

ConvexPolygon gen_convex_polygon(const GenSpec2& spec) {
  if (spec.n < 3) throw GeometryError(ErrorKind::TooFewVertices, "polygon needs n >= 3");
  if (!(spec.semi_axis_a > 0 && spec.semi_axis_b > 0)) {
    throw GeometryError(ErrorKind::InvalidArgument, "semi-axes must be positive");
  }
  const Scalar step = 2 * std::numbers::pi / static_cast<Scalar>(spec.n);
  const Scalar cr = std::cos(spec.rotation);
  const Scalar sr = std::sin(spec.rotation);
  Rng rng(spec.seed);
  const Scalar phase = spec.regular ? 0 : 2 * std::numbers::pi * rng.uniform();

  std::vector<Point2> vertices;
  vertices.reserve(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    const Scalar jitter = spec.regular ? 0 : 0.9 * rng.uniform();
    const Scalar t = phase + step * (static_cast<Scalar>(i) + jitter);
    const Scalar ex = spec.semi_axis_a * std::cos(t);
    const Scalar ey = spec.semi_axis_b * std::sin(t);
    vertices.push_back({cr * ex - sr * ey, sr * ex + cr * ey});
  }
  return ConvexPolygon::validate(std::move(vertices));
}

ConvexPolyhedron gen_convex_polyhedron(const GenSpec3& spec) {
  if (spec.level < 0 || spec.level > 5) {
    throw GeometryError(ErrorKind::InvalidArgument, "icosphere level must be in 0..5");
  }
  const Affine3 affine = spec.affine.value_or(random_affine(spec.seed));
  if (!(affine.determinant() > 1e-12)) {
    throw GeometryError(ErrorKind::SingularAffine, "affine map must have positive determinant");
  }

  const Scalar phi = (1 + std::sqrt(5.0)) / 2;
  std::vector<Point3> v{{-1, phi, 0}, {1, phi, 0},  {-1, -phi, 0}, {1, -phi, 0},
                        {0, -1, phi}, {0, 1, phi},  {0, -1, -phi}, {0, 1, -phi},
                        {phi, 0, -1}, {phi, 0, 1},  {-phi, 0, -1}, {-phi, 0, 1}};
  std::vector<FaceRing> faces{{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
                              {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
                              {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
                              {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  for (Point3& p : v) p = (1 / norm(p)) * p;

  for (int level = 0; level < spec.level; ++level) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> midpoints;
    auto midpoint = [&](std::uint32_t a, std::uint32_t b) {
      const auto key = std::minmax(a, b);
      if (auto it = midpoints.find(key); it != midpoints.end()) return it->second;
      const Point3 m = 0.5 * (v[a] + v[b]);
      v.push_back((1 / norm(m)) * m);
      const auto idx = static_cast<std::uint32_t>(v.size() - 1);
      midpoints.emplace(key, idx);
      return idx;
    };
    std::vector<FaceRing> next;
    next.reserve(faces.size() * 4);
    for (const FaceRing& f : faces) {
      const std::uint32_t ab = midpoint(f[0], f[1]);
      const std::uint32_t bc = midpoint(f[1], f[2]);
      const std::uint32_t ca = midpoint(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces.swap(next);
  }

  for (Point3& p : v) p = affine.apply(p);
  return ConvexPolyhedron::validate(std::move(v), std::move(faces));
}

std::vector<Point2> gen_query_points(const Aabb2& box, const QuerySpec& spec) {
  if (!(spec.inflation >= 1)) {
    throw GeometryError(ErrorKind::InvalidArgument, "inflation must be >= 1");
  }
  const Aabb2 b = box.scaled(spec.inflation);
  Rng rng(spec.seed);
  std::vector<Point2> pts;
  pts.reserve(spec.m);
  for (std::size_t k = 0; k < spec.m; ++k) {
    const Scalar x = rng.uniform(b.min.x, b.max.x);
    const Scalar y = rng.uniform(b.min.y, b.max.y);
    pts.push_back({x, y});
  }
  return pts;
}

std::vector<Point3> gen_query_points(const Aabb3& box, const QuerySpec& spec) {
  if (!(spec.inflation >= 1)) {
    throw GeometryError(ErrorKind::InvalidArgument, "inflation must be >= 1");
  }
  const Aabb3 b = box.scaled(spec.inflation);
  Rng rng(spec.seed);
  std::vector<Point3> pts;
  pts.reserve(spec.m);
  for (std::size_t k = 0; k < spec.m; ++k) {
    const Scalar x = rng.uniform(b.min.x, b.max.x);
    const Scalar y = rng.uniform(b.min.y, b.max.y);
    const Scalar z = rng.uniform(b.min.z, b.max.z);
    pts.push_back({x, y, z});
  }
  return pts;
}

std::vector<GenSpec2> default_polygon_corpus() {
  std::vector<GenSpec2> corpus;
  for (std::size_t n : {8, 64, 512, 4096}) {
    for (std::uint64_t k = 0; k < 25; ++k) {
      const std::uint64_t seed = 1000 * n + k;
      Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
      GenSpec2 spec;
      spec.n = n;
      spec.seed = seed;
      spec.semi_axis_a = 1;
      spec.semi_axis_b = rng.uniform(0.25, 1);
      spec.rotation = 2 * std::numbers::pi * rng.uniform();
      corpus.push_back(spec);
    }
  }
  return corpus;
}

std::vector<GenSpec3> default_polyhedron_corpus() {
  std::vector<GenSpec3> corpus;
  for (int level = 0; level <= 3; ++level) {
    for (std::uint64_t k = 0; k < 20; ++k) {
      corpus.push_back({level, 7000 + k, std::nullopt});
    }
  }
  return corpus;
}

}  // namespace cvxloc
