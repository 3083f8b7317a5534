#include "cvxloc/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <unordered_map>

namespace cvxloc {

namespace {

void require(bool ok, ErrorKind kind, const std::string& what) {
  if (!ok) throw GeometryError(kind, what);
}

Scalar signed_area(std::span<const Point2> v) {
  Scalar twice = 0;
  const Point2 o = v.front();
  for (std::size_t i = 1; i + 1 < v.size(); ++i) twice += cross(v[i] - o, v[i + 1] - o);
  return 0.5 * twice;
}

}  // namespace

ConvexPolygon ConvexPolygon::validate(std::vector<Point2> vertices) {
  const std::size_t n = vertices.size();
  require(n >= 3, ErrorKind::TooFewVertices, "polygon needs at least 3 vertices");
  for (const Point2& v : vertices) {
    require(is_finite(v), ErrorKind::NonFinite, "vertex coordinate is not finite");
  }

  ConvexPolygon poly;
  poly.aabb_ = Aabb2::of(vertices);
  poly.tol_ = Tolerances::for_diagonal(poly.aabb_.diagonal());
  const Tolerances& tol = poly.tol_;
  require(tol.diag > 0, ErrorKind::DegenerateEdge, "all vertices coincide");

  for (std::size_t i = 0; i < n; ++i) {
    require(norm(vertices[(i + 1) % n] - vertices[i]) > tol.eps_len, ErrorKind::DegenerateEdge,
            "repeated vertex at index " + std::to_string(i));
  }

  const Scalar area = signed_area(vertices);
  require(std::abs(area) > tol.eps_len * tol.diag, ErrorKind::NotConvex, "polygon has zero area");
  if (area < 0) {
    std::reverse(vertices.begin(), vertices.end());
    poly.winding_repaired_ = true;
  }

  // Every turn must be strictly to the left and the turns must add up to a
  // single revolution; the second check rejects star-shaped windings whose
  // local turns all look convex.
  Scalar turning = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 e1 = vertices[i] - vertices[(i + n - 1) % n];
    const Point2 e2 = vertices[(i + 1) % n] - vertices[i];
    const Scalar turn = cross(e1, e2);
    require(turn > tol.eps_len * std::max(norm(e1), norm(e2)), ErrorKind::NotConvex,
            "non-convex or collinear turn at vertex " + std::to_string(i));
    turning += std::atan2(turn, dot(e1, e2));
  }
  require(std::abs(turning - 2 * std::numbers::pi) < 1e-6, ErrorKind::NotConvex,
          "boundary winds more than once");

  poly.halfplanes_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    poly.halfplanes_.push_back(halfplane_from_edge(vertices[i], vertices[(i + 1) % n], tol.eps_len));
  }
  poly.vertices_ = std::move(vertices);
  return poly;
}

ConvexPolyhedron ConvexPolyhedron::validate(std::vector<Point3> vertices,
                                            std::vector<FaceRing> faces) {
  const std::size_t nv = vertices.size();
  require(nv >= 4, ErrorKind::TooFewVertices, "polyhedron needs at least 4 vertices");
  require(faces.size() >= 4, ErrorKind::TooFewVertices, "polyhedron needs at least 4 faces");
  for (const Point3& v : vertices) {
    require(is_finite(v), ErrorKind::NonFinite, "vertex coordinate is not finite");
  }
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const FaceRing& ring = faces[f];
    require(ring.size() >= 3, ErrorKind::InvalidFace,
            "face " + std::to_string(f) + " has fewer than 3 vertices");
    for (std::size_t k = 0; k < ring.size(); ++k) {
      require(ring[k] < nv, ErrorKind::InvalidFace,
              "face " + std::to_string(f) + " references a missing vertex");
      require(std::count(ring.begin(), ring.end(), ring[k]) == 1, ErrorKind::InvalidFace,
              "face " + std::to_string(f) + " repeats a vertex");
    }
  }

  ConvexPolyhedron poly;
  poly.aabb_ = Aabb3::of(vertices);
  poly.tol_ = Tolerances::for_diagonal(poly.aabb_.diagonal());
  const Tolerances& tol = poly.tol_;
  require(tol.diag > 0, ErrorKind::DegenerateFace, "all vertices coincide");

  poly.halfspaces_.reserve(faces.size());
  std::vector<Point3> ring_pts;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    FaceRing& ring = faces[f];
    ring_pts.clear();
    for (std::uint32_t idx : ring) ring_pts.push_back(vertices[idx]);

    const Point3 n = newell_normal(ring_pts);
    const Scalar twice_area = norm(n);
    require(twice_area > tol.eps_len * tol.diag, ErrorKind::DegenerateFace,
            "face " + std::to_string(f) + " is degenerate");
    const Point3 unit = (1.0 / twice_area) * n;
    Point3 center{};
    for (const Point3& p : ring_pts) center = center + p;
    center = (1.0 / static_cast<Scalar>(ring_pts.size())) * center;
    HalfSpace3 plane{unit.x, unit.y, unit.z, -dot(unit, center)};
    for (const Point3& p : ring_pts) {
      require(std::abs(eval(plane, p)) <= tol.eps_plane, ErrorKind::NonPlanarFace,
              "face " + std::to_string(f) + " is not planar");
    }

    // All vertices must lie on one side of every face plane.
    Scalar lo = 0;
    Scalar hi = 0;
    for (const Point3& v : vertices) {
      const Scalar s = eval(plane, v);
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    require(!(lo < -tol.eps_plane && hi > tol.eps_plane), ErrorKind::NotConvex,
            "vertices on both sides of face " + std::to_string(f));
    require(lo < -tol.eps_plane || hi > tol.eps_plane, ErrorKind::NotConvex,
            "polyhedron is flat");
    if (hi > tol.eps_plane) {
      // Newell normal points inward: the ring is wound clockwise from outside.
      std::reverse(ring.begin(), ring.end());
    } else {
      plane = {-plane.a, -plane.b, -plane.c, -plane.d};
    }
    poly.halfspaces_.push_back(plane);
  }

  std::unordered_map<std::uint64_t, int> edge_uses;
  for (const FaceRing& ring : faces) {
    for (std::size_t k = 0; k < ring.size(); ++k) {
      const std::uint64_t a = ring[k];
      const std::uint64_t b = ring[(k + 1) % ring.size()];
      ++edge_uses[std::min(a, b) << 32 | std::max(a, b)];
    }
  }
  for (const auto& [key, uses] : edge_uses) {
    require(uses == 2, ErrorKind::EulerViolation,
            "edge (" + std::to_string(key >> 32) + "," + std::to_string(key & 0xffffffffu) +
                ") is shared by " + std::to_string(uses) + " faces");
  }
  const auto euler = static_cast<long long>(nv) - static_cast<long long>(edge_uses.size()) +
                     static_cast<long long>(faces.size());
  require(euler == 2, ErrorKind::EulerViolation,
          "V - E + F = " + std::to_string(euler) + ", expected 2");
  poly.edge_count_ = edge_uses.size();

  poly.vertices_ = std::move(vertices);
  poly.faces_ = std::move(faces);

  const Point3 c = centroid(poly);
  for (const HalfSpace3& h : poly.halfspaces_) {
    require(eval(h, c) > tol.eps_q, ErrorKind::NotConvex, "vertex centroid is not interior");
  }
  return poly;
}

std::vector<Point3> ConvexPolyhedron::face_points(std::size_t face) const {
  std::vector<Point3> pts;
  pts.reserve(faces_[face].size());
  for (std::uint32_t idx : faces_[face]) pts.push_back(vertices_[idx]);
  return pts;
}

Point2 centroid(const ConvexPolygon& polygon) {
  Point2 sum{};
  for (const Point2& v : polygon.vertices()) sum = sum + v;
  return (1.0 / static_cast<Scalar>(polygon.size())) * sum;
}

Point3 centroid(const ConvexPolyhedron& polyhedron) {
  Point3 sum{};
  for (const Point3& v : polyhedron.vertices()) sum = sum + v;
  return (1.0 / static_cast<Scalar>(polyhedron.vertices().size())) * sum;
}

}  // namespace cvxloc
