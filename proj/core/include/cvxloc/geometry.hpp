#pragma once

// Floating-point primitives shared by every locator: points, boxes,
// unit-normal half-planes/half-spaces and the three-valued containment result.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cvxloc {

using Scalar = double;

struct Point2 {
  Scalar x = 0;
  Scalar y = 0;

  friend constexpr bool operator==(const Point2&, const Point2&) = default;
};

struct Point3 {
  Scalar x = 0;
  Scalar y = 0;
  Scalar z = 0;

  friend constexpr bool operator==(const Point3&, const Point3&) = default;
};

constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
constexpr Point2 operator*(Scalar s, Point2 a) { return {s * a.x, s * a.y}; }
constexpr Scalar dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
// z-component of the 3D cross product; > 0 when b is counter-clockwise of a.
constexpr Scalar cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline Scalar norm(Point2 a) { return std::hypot(a.x, a.y); }

constexpr Point3 operator+(Point3 a, Point3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
constexpr Point3 operator-(Point3 a, Point3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
constexpr Point3 operator*(Scalar s, Point3 a) { return {s * a.x, s * a.y, s * a.z}; }
constexpr Scalar dot(Point3 a, Point3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Point3 cross(Point3 a, Point3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline Scalar norm(Point3 a) { return std::sqrt(dot(a, a)); }

inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }
inline bool is_finite(Point3 p) {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

struct Aabb2 {
  Point2 min;
  Point2 max;

  static Aabb2 of(std::span<const Point2> points);

  Scalar width() const { return max.x - min.x; }
  Scalar height() const { return max.y - min.y; }
  Scalar diagonal() const { return norm(max - min); }
  Point2 center() const { return 0.5 * (min + max); }
  bool contains(Point2 p) const {
    return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y;
  }
  // Scales the box about its center.
  Aabb2 scaled(Scalar factor) const;
  // Grows every side outward by `margin`.
  Aabb2 expanded(Scalar margin) const;

  friend bool operator==(const Aabb2&, const Aabb2&) = default;
};

struct Aabb3 {
  Point3 min;
  Point3 max;

  static Aabb3 of(std::span<const Point3> points);

  Scalar diagonal() const { return norm(max - min); }
  Point3 center() const { return 0.5 * (min + max); }
  bool contains(Point3 p) const {
    return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y && p.z >= min.z &&
           p.z <= max.z;
  }
  Aabb3 scaled(Scalar factor) const;
  Aabb3 expanded(Scalar margin) const;

  friend bool operator==(const Aabb3&, const Aabb3&) = default;
};

/// Inward half-plane a*x + b*y + c >= 0 with (a, b) a unit vector, so that
/// evaluation yields the signed distance to the supporting line.
struct HalfPlane2 {
  Scalar a = 0;
  Scalar b = 0;
  Scalar c = 0;

  friend bool operator==(const HalfPlane2&, const HalfPlane2&) = default;
};

/// Inward half-space a*x + b*y + c*z + d >= 0 with (a, b, c) a unit vector.
struct HalfSpace3 {
  Scalar a = 0;
  Scalar b = 0;
  Scalar c = 0;
  Scalar d = 0;

  friend bool operator==(const HalfSpace3&, const HalfSpace3&) = default;
};

inline Scalar eval(const HalfPlane2& h, Point2 p) { return h.a * p.x + h.b * p.y + h.c; }
inline Scalar eval(const HalfSpace3& h, Point3 p) {
  return h.a * p.x + h.b * p.y + h.c * p.z + h.d;
}

enum class Containment : std::uint8_t { Inside, OnBoundary, Outside };

std::string_view to_string(Containment c);

/// Maps the minimal signed distance over a deciding set of half-planes to a
/// containment class with a symmetric boundary band of half-width `eps_q`.
// Inside above eps_q, OnBoundary within [-eps_q, eps_q], Outside below it or
// for NaN.
inline Containment classify(Scalar min_distance, Scalar eps_q) {
  const int rank = int{!(min_distance > eps_q)} + int{!(min_distance >= -eps_q)};
  return static_cast<Containment>(rank);
}

/// Scale-relative tolerances derived from a shape's bounding-box diagonal.
struct Tolerances {
  Scalar diag = 0;
  Scalar eps_len = 0;    // degenerate lengths
  Scalar eps_plane = 0;  // planarity / convexity slack
  Scalar eps_q = 0;      // half-width of the query boundary band

  static Tolerances for_diagonal(Scalar diag) {
    return {diag, 1e-12 * diag, 1e-9 * diag, 1e-9 * diag};
  }

  friend bool operator==(const Tolerances&, const Tolerances&) = default;
};

/// Per-query instrumentation. Locators add to these counters when handed a
/// non-null pointer; the hot path is otherwise untouched.
struct QueryStats {
  std::size_t evaluations = 0;     // half-plane / half-space evaluations
  std::size_t bisection_steps = 0; // wedge probes during binary search
};

enum class ErrorKind {
  DegenerateEdge,
  DegenerateFace,
  NonPlanarFace,
  InteriorOnPlane,
  NotConvex,
  TooFewVertices,
  InvalidFace,
  NonFinite,
  EulerViolation,
  ReferenceNotInterior,
  ZeroDirection,
  SingularAffine,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Inward half-plane of the directed edge p -> q: its left side, which is the
/// interior for counter-clockwise polygons.
HalfPlane2 halfplane_from_edge(Point2 p, Point2 q, Scalar eps_len = 0);

/// Plane through a planar face, oriented so that `interior` evaluates
/// positive. Tolerances default to those of the bounding box of the face
/// vertices and the interior point.
HalfSpace3 halfspace_from_face(std::span<const Point3> face, Point3 interior);
HalfSpace3 halfspace_from_face(std::span<const Point3> face, Point3 interior,
                               const Tolerances& tol);

/// Newell normal of a polygon ring; its length is twice the polygon area.
Point3 newell_normal(std::span<const Point3> ring);

}  // namespace cvxloc
