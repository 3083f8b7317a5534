#include "cvxloc/geometry.hpp"

#include <algorithm>
#include <vector>

namespace cvxloc {

Aabb2 Aabb2::of(std::span<const Point2> points) {
  if (points.empty()) return {};
  Aabb2 box{points.front(), points.front()};
  for (const Point2& p : points) {
    box.min.x = std::min(box.min.x, p.x);
    box.min.y = std::min(box.min.y, p.y);
    box.max.x = std::max(box.max.x, p.x);
    box.max.y = std::max(box.max.y, p.y);
  }
  return box;
}

Aabb2 Aabb2::scaled(Scalar factor) const {
  const Point2 c = center();
  const Point2 half = (0.5 * factor) * (max - min);
  return {c - half, c + half};
}

Aabb2 Aabb2::expanded(Scalar margin) const {
  return {{min.x - margin, min.y - margin}, {max.x + margin, max.y + margin}};
}

Aabb3 Aabb3::of(std::span<const Point3> points) {
  if (points.empty()) return {};
  Aabb3 box{points.front(), points.front()};
  for (const Point3& p : points) {
    box.min = {std::min(box.min.x, p.x), std::min(box.min.y, p.y), std::min(box.min.z, p.z)};
    box.max = {std::max(box.max.x, p.x), std::max(box.max.y, p.y), std::max(box.max.z, p.z)};
  }
  return box;
}

Aabb3 Aabb3::scaled(Scalar factor) const {
  const Point3 c = center();
  const Point3 half = (0.5 * factor) * (max - min);
  return {c - half, c + half};
}

Aabb3 Aabb3::expanded(Scalar margin) const {
  return {{min.x - margin, min.y - margin, min.z - margin},
          {max.x + margin, max.y + margin, max.z + margin}};
}

std::string_view to_string(Containment c) {
  switch (c) {
    case Containment::Inside:
      return "Inside";
    case Containment::OnBoundary:
      return "OnBoundary";
    case Containment::Outside:
      return "Outside";
  }
  return "?";
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateEdge:
      return "DegenerateEdge";
    case ErrorKind::DegenerateFace:
      return "DegenerateFace";
    case ErrorKind::NonPlanarFace:
      return "NonPlanarFace";
    case ErrorKind::InteriorOnPlane:
      return "InteriorOnPlane";
    case ErrorKind::NotConvex:
      return "NotConvex";
    case ErrorKind::TooFewVertices:
      return "TooFewVertices";
    case ErrorKind::InvalidFace:
      return "InvalidFace";
    case ErrorKind::NonFinite:
      return "NonFinite";
    case ErrorKind::EulerViolation:
      return "EulerViolation";
    case ErrorKind::ReferenceNotInterior:
      return "ReferenceNotInterior";
    case ErrorKind::ZeroDirection:
      return "ZeroDirection";
    case ErrorKind::SingularAffine:
      return "SingularAffine";
    case ErrorKind::InvalidArgument:
      return "InvalidArgument";
  }
  return "?";
}

GeometryError::GeometryError(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

HalfPlane2 halfplane_from_edge(Point2 p, Point2 q, Scalar eps_len) {
  const Point2 d = q - p;
  const Scalar len = norm(d);
  if (!(len > eps_len)) {
    throw GeometryError(ErrorKind::DegenerateEdge, "edge endpoints coincide");
  }
  // Left normal of p -> q.
  const Scalar a = -d.y / len;
  const Scalar b = d.x / len;
  return {a, b, -(a * p.x + b * p.y)};
}

Point3 newell_normal(std::span<const Point3> ring) {
  Point3 n{};
  const std::size_t count = ring.size();
  for (std::size_t i = 0; i < count; ++i) {
    const Point3& u = ring[i];
    const Point3& v = ring[(i + 1) % count];
    n.x += (u.y - v.y) * (u.z + v.z);
    n.y += (u.z - v.z) * (u.x + v.x);
    n.z += (u.x - v.x) * (u.y + v.y);
  }
  return n;
}

HalfSpace3 halfspace_from_face(std::span<const Point3> face, Point3 interior) {
  std::vector<Point3> pts(face.begin(), face.end());
  pts.push_back(interior);
  return halfspace_from_face(face, interior, Tolerances::for_diagonal(Aabb3::of(pts).diagonal()));
}

HalfSpace3 halfspace_from_face(std::span<const Point3> face, Point3 interior,
                               const Tolerances& tol) {
  if (face.size() < 3) {
    throw GeometryError(ErrorKind::DegenerateFace, "face has fewer than 3 vertices");
  }
  const Point3 n = newell_normal(face);
  const Scalar twice_area = norm(n);
  if (!(twice_area > tol.eps_len * tol.diag)) {
    throw GeometryError(ErrorKind::DegenerateFace, "face vertices are collinear");
  }
  const Point3 unit = (1.0 / twice_area) * n;

  Point3 center{};
  for (const Point3& v : face) center = center + v;
  center = (1.0 / static_cast<Scalar>(face.size())) * center;

  HalfSpace3 h{unit.x, unit.y, unit.z, -dot(unit, center)};
  for (const Point3& v : face) {
    if (std::abs(eval(h, v)) > tol.eps_plane) {
      throw GeometryError(ErrorKind::NonPlanarFace, "face vertex deviates from its plane");
    }
  }
  const Scalar at_interior = eval(h, interior);
  if (std::abs(at_interior) < tol.eps_q) {
    throw GeometryError(ErrorKind::InteriorOnPlane, "interior point lies on the face plane");
  }
  if (at_interior < 0) h = {-h.a, -h.b, -h.c, -h.d};
  return h;
}

}  // namespace cvxloc
