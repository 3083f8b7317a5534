#pragma once

// Reference computations for the test suites. They work from raw vertex
// coordinates and never touch the half-plane or half-space coefficients the
// library derives.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "cvxloc/geometry.hpp"
#include "cvxloc/shapes.hpp"

namespace oracle {

using cvxloc::Point2;
using cvxloc::Point3;
using cvxloc::Scalar;

inline Scalar segment_distance(Point2 p, Point2 a, Point2 b) {
  const Scalar dx = b.x - a.x;
  const Scalar dy = b.y - a.y;
  const Scalar len2 = dx * dx + dy * dy;
  Scalar t = len2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0;
  t = std::clamp<Scalar>(t, 0, 1);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

// Even-odd crossing test with a horizontal ray towards +x.
inline bool crossing_inside(std::span<const Point2> v, Point2 p) {
  bool inside = false;
  for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
    if ((v[i].y > p.y) != (v[j].y > p.y)) {
      const Scalar x = v[j].x + (p.y - v[j].y) * (v[i].x - v[j].x) / (v[i].y - v[j].y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

inline Scalar boundary_distance(std::span<const Point2> v, Point2 p) {
  Scalar best = std::numeric_limits<Scalar>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    best = std::min(best, segment_distance(p, v[i], v[(i + 1) % v.size()]));
  }
  return best;
}

// Classification for points farther than `band` from the boundary; nullopt
// inside the band.
inline std::optional<cvxloc::Containment> classify_2d(std::span<const Point2> v, Point2 p,
                                                      Scalar band) {
  if (boundary_distance(v, p) <= band) return std::nullopt;
  return crossing_inside(v, p) ? cvxloc::Containment::Inside : cvxloc::Containment::Outside;
}

struct RayHit2 {
  std::size_t edge;
  Scalar t;     // ray parameter
  Scalar side;  // edge parameter in [0, 1]
};

// Every edge hit by origin + t * dir, t > 0, sorted by t.
inline std::vector<RayHit2> ray_hits(std::span<const Point2> v, Point2 origin, Point2 dir) {
  std::vector<RayHit2> hits;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = v[i];
    const Point2 e{v[(i + 1) % n].x - a.x, v[(i + 1) % n].y - a.y};
    const Scalar den = dir.x * e.y - dir.y * e.x;
    if (den == 0) continue;
    const Point2 w{a.x - origin.x, a.y - origin.y};
    const Scalar t = (w.x * e.y - w.y * e.x) / den;
    const Scalar s = (w.x * dir.y - w.y * dir.x) / den;
    if (t > 0 && s >= -1e-9 && s <= 1 + 1e-9) hits.push_back({i, t, s});
  }
  std::sort(hits.begin(), hits.end(), [](const RayHit2& a, const RayHit2& b) { return a.t < b.t; });
  return hits;
}

// Edge where the ray from an interior point leaves the polygon. When the ray
// passes within `vertex_margin` (edge parameter) of a vertex both adjacent
// edges are acceptable exits and both are returned.
inline std::vector<std::size_t> exit_edges(std::span<const Point2> v, Point2 origin, Point2 dir,
                                           Scalar vertex_margin = 1e-9) {
  const auto hits = ray_hits(v, origin, dir);
  std::vector<std::size_t> out;
  if (hits.empty()) return out;
  const RayHit2& h = hits.front();
  out.push_back(h.edge);
  const std::size_t n = v.size();
  if (h.side < vertex_margin) out.push_back((h.edge + n - 1) % n);
  if (h.side > 1 - vertex_margin) out.push_back((h.edge + 1) % n);
  return out;
}

// Exit edge by clipping the ray against each edge line whose outward side
// the ray heads into; the exit is the nearest such crossing. Edges whose
// crossing is within `rel` of the nearest are returned too.
inline std::vector<std::size_t> exit_edges_by_clipping(std::span<const Point2> v, Point2 origin,
                                                       Point2 dir, Scalar rel = 1e-9) {
  const std::size_t n = v.size();
  std::vector<Scalar> t(n, std::numeric_limits<Scalar>::infinity());
  Scalar best = std::numeric_limits<Scalar>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = v[i];
    const Point2 b = v[(i + 1) % n];
    // Outward normal of a counter-clockwise edge.
    const Point2 out{b.y - a.y, a.x - b.x};
    const Scalar speed = out.x * dir.x + out.y * dir.y;
    if (speed <= 0) continue;
    t[i] = (out.x * (a.x - origin.x) + out.y * (a.y - origin.y)) / speed;
    best = std::min(best, t[i]);
  }
  std::vector<std::size_t> exits;
  for (std::size_t i = 0; i < n; ++i) {
    if (t[i] <= best * (1 + rel)) exits.push_back(i);
  }
  return exits;
}

inline Point3 sub(Point3 a, Point3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Scalar dot3(Point3 a, Point3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Point3 cross3(Point3 a, Point3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// Moller-Trumbore; returns t and barycentrics for a hit in front of origin.
struct TriHit {
  Scalar t, u, v;
};

inline std::optional<TriHit> ray_triangle(Point3 origin, Point3 dir, Point3 a, Point3 b, Point3 c) {
  const Point3 e1 = sub(b, a);
  const Point3 e2 = sub(c, a);
  const Point3 pv = cross3(dir, e2);
  const Scalar det = dot3(e1, pv);
  if (std::abs(det) < 1e-300) return std::nullopt;
  const Scalar inv = 1 / det;
  const Point3 tv = sub(origin, a);
  const Scalar u = dot3(tv, pv) * inv;
  const Point3 qv = cross3(tv, e1);
  const Scalar w = dot3(dir, qv) * inv;
  const Scalar t = dot3(e2, qv) * inv;
  if (t <= 0) return std::nullopt;
  return TriHit{t, u, w};
}

struct FaceHit {
  std::size_t face;
  Scalar t;
  Scalar margin;  // smallest barycentric coordinate within its fan triangle
};

// Faces of a convex polyhedron hit by a ray from an interior point, nearest
// first. Faces are fanned into triangles from their first vertex.
inline std::vector<FaceHit> face_hits(const cvxloc::ConvexPolyhedron& poly, Point3 origin,
                                      Point3 dir) {
  std::vector<FaceHit> hits;
  const auto verts = poly.vertices();
  const auto faces = poly.faces();
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& ring = faces[f];
    std::optional<FaceHit> best;
    for (std::size_t k = 1; k + 1 < ring.size(); ++k) {
      const auto hit = ray_triangle(origin, dir, verts[ring[0]], verts[ring[k]], verts[ring[k + 1]]);
      if (!hit) continue;
      const Scalar margin = std::min({hit->u, hit->v, 1 - hit->u - hit->v});
      if (margin < -1e-9) continue;
      if (!best || margin > best->margin) best = FaceHit{f, hit->t, margin};
    }
    if (best) hits.push_back(*best);
  }
  std::sort(hits.begin(), hits.end(), [](const FaceHit& a, const FaceHit& b) { return a.t < b.t; });
  return hits;
}

// Faces where the ray leaves the polyhedron: the nearest hit and any other
// hit at the same distance (rays through an edge or vertex).
inline std::vector<std::size_t> exit_faces(const cvxloc::ConvexPolyhedron& poly, Point3 origin,
                                           Point3 dir) {
  const auto hits = face_hits(poly, origin, dir);
  std::vector<std::size_t> out;
  if (hits.empty()) return out;
  const Scalar t0 = hits.front().t;
  for (const FaceHit& h : hits) {
    if (h.t <= t0 * (1 + 1e-9)) out.push_back(h.face);
  }
  return out;
}

// Same, by clipping against face planes taken from the first three vertices
// of each ring.
inline std::vector<std::size_t> exit_faces_by_clipping(const cvxloc::ConvexPolyhedron& poly,
                                                       Point3 origin, Point3 dir,
                                                       Scalar rel = 1e-9) {
  const auto verts = poly.vertices();
  const auto faces = poly.faces();
  std::vector<Scalar> t(faces.size(), std::numeric_limits<Scalar>::infinity());
  Scalar best = std::numeric_limits<Scalar>::infinity();
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const Point3 a = verts[faces[f][0]];
    Point3 n = cross3(sub(verts[faces[f][1]], a), sub(verts[faces[f][2]], a));
    if (dot3(n, sub(origin, a)) > 0) n = {-n.x, -n.y, -n.z};
    const Scalar speed = dot3(n, dir);
    if (speed <= 0) continue;
    t[f] = dot3(n, sub(a, origin)) / speed;
    best = std::min(best, t[f]);
  }
  std::vector<std::size_t> exits;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (t[f] <= best * (1 + rel)) exits.push_back(f);
  }
  return exits;
}

// Signed distance to the plane of each face, positive towards `interior`,
// with the plane taken from the first three vertices of the face.
inline Scalar min_plane_distance(const cvxloc::ConvexPolyhedron& poly, Point3 interior, Point3 p) {
  Scalar best = std::numeric_limits<Scalar>::infinity();
  const auto verts = poly.vertices();
  for (const auto& ring : poly.faces()) {
    const Point3 a = verts[ring[0]];
    Point3 n = cross3(sub(verts[ring[1]], a), sub(verts[ring[2]], a));
    const Scalar len = std::sqrt(dot3(n, n));
    n = {n.x / len, n.y / len, n.z / len};
    Scalar d = dot3(n, sub(p, a));
    if (dot3(n, sub(interior, a)) < 0) d = -d;
    best = std::min(best, d);
  }
  return best;
}

// Parity of crossings along a fixed irrational-ish direction.
inline bool parity_inside(const cvxloc::ConvexPolyhedron& poly, Point3 p) {
  const Point3 dir{0.5773502691896258, 0.6123724356957945, 0.5400617248673217};
  const auto verts = poly.vertices();
  int crossings = 0;
  for (const auto& ring : poly.faces()) {
    for (std::size_t k = 1; k + 1 < ring.size(); ++k) {
      const auto hit = ray_triangle(p, dir, verts[ring[0]], verts[ring[k]], verts[ring[k + 1]]);
      if (hit && hit->u >= 0 && hit->v >= 0 && hit->u + hit->v <= 1) ++crossings;
    }
  }
  return crossings % 2 == 1;
}

inline std::optional<cvxloc::Containment> classify_3d(const cvxloc::ConvexPolyhedron& poly,
                                                      Point3 interior, Point3 p, Scalar band) {
  if (std::abs(min_plane_distance(poly, interior, p)) <= band) return std::nullopt;
  return parity_inside(poly, p) ? cvxloc::Containment::Inside : cvxloc::Containment::Outside;
}

}  // namespace oracle
