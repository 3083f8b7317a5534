#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cvxloc/geometry.hpp"

namespace cvxloc {

/// Strictly convex polygon with counter-clockwise vertices and one inward
/// half-plane per edge. Edge i runs from vertices[i] to vertices[i + 1 mod N].
///
/// Instances only come out of validate(); all invariants hold afterwards and
/// the object is immutable.
class ConvexPolygon {
 public:
  /// Validates raw vertices; clockwise input is reversed. Throws
  /// GeometryError naming the first violated invariant.
  static ConvexPolygon validate(std::vector<Point2> vertices);

  std::size_t size() const { return vertices_.size(); }
  std::span<const Point2> vertices() const { return vertices_; }
  std::span<const HalfPlane2> halfplanes() const { return halfplanes_; }
  const Aabb2& aabb() const { return aabb_; }
  const Tolerances& tolerances() const { return tol_; }
  // True when the input was clockwise and had to be reversed.
  bool winding_repaired() const { return winding_repaired_; }

  friend bool operator==(const ConvexPolygon& a, const ConvexPolygon& b) {
    return a.vertices_ == b.vertices_ && a.halfplanes_ == b.halfplanes_ && a.aabb_ == b.aabb_;
  }

 private:
  ConvexPolygon() = default;

  std::vector<Point2> vertices_;
  std::vector<HalfPlane2> halfplanes_;
  Aabb2 aabb_;
  Tolerances tol_;
  bool winding_repaired_ = false;
};

using FaceRing = std::vector<std::uint32_t>;

/// Closed convex polyhedron. Faces are vertex-index rings wound
/// counter-clockwise seen from outside; halfspaces[i] is the inward
/// half-space of faces[i].
class ConvexPolyhedron {
 public:
  /// Validates raw vertex/face data; inward-wound faces are reversed.
  static ConvexPolyhedron validate(std::vector<Point3> vertices, std::vector<FaceRing> faces);

  std::size_t size() const { return faces_.size(); }
  std::span<const Point3> vertices() const { return vertices_; }
  std::span<const FaceRing> faces() const { return faces_; }
  std::span<const HalfSpace3> halfspaces() const { return halfspaces_; }
  const Aabb3& aabb() const { return aabb_; }
  const Tolerances& tolerances() const { return tol_; }
  std::size_t edge_count() const { return edge_count_; }

  // Vertex positions of one face, in ring order.
  std::vector<Point3> face_points(std::size_t face) const;

  friend bool operator==(const ConvexPolyhedron& a, const ConvexPolyhedron& b) {
    return a.vertices_ == b.vertices_ && a.faces_ == b.faces_ && a.halfspaces_ == b.halfspaces_;
  }

 private:
  ConvexPolyhedron() = default;

  std::vector<Point3> vertices_;
  std::vector<FaceRing> faces_;
  std::vector<HalfSpace3> halfspaces_;
  Aabb3 aabb_;
  Tolerances tol_;
  std::size_t edge_count_ = 0;
};

inline ConvexPolygon validate_polygon(std::vector<Point2> vertices) {
  return ConvexPolygon::validate(std::move(vertices));
}

inline ConvexPolyhedron validate_polyhedron(std::vector<Point3> vertices,
                                            std::vector<FaceRing> faces) {
  return ConvexPolyhedron::validate(std::move(vertices), std::move(faces));
}

/// Arithmetic mean of the vertices. Strictly interior for validated shapes.
Point2 centroid(const ConvexPolygon& polygon);
Point3 centroid(const ConvexPolyhedron& polyhedron);

}  // namespace cvxloc
