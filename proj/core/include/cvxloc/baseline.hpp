#pragma once

// Reference locators: the O(N) half-plane scan, O(log N) wedge bisection
// around a vertex, O(log N) sorted horizontal slabs and O(1) uniform
// horizontal slabs. They double as oracles for the constant-time locators.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cvxloc/shapes.hpp"

namespace cvxloc {

/// Minimal signed distance over all bounding half-planes (all N evaluated).
Scalar min_signed_distance(const ConvexPolygon& polygon, Point2 p);
Scalar min_signed_distance(const ConvexPolyhedron& polyhedron, Point3 p);

Containment locate_linear_2d(const ConvexPolygon& polygon, Point2 p, QueryStats* stats = nullptr);
Containment locate_linear_3d(const ConvexPolyhedron& polyhedron, Point3 p,
                             QueryStats* stats = nullptr);

/// Fan of half-planes G_k through vertex 0 and vertex k (k = 1..N-1), each
/// oriented with vertex k+1 on its left. A query bisects the fan to find the
/// triangle (v0, v_k, v_{k+1}) containing it and then tests edge k.
class WedgeIndex2 {
 public:
  static WedgeIndex2 build(const ConvexPolygon& polygon);

  Containment locate(Point2 p, QueryStats* stats = nullptr) const;

  std::size_t size() const { return edges_.size(); }
  Point2 apex() const { return apex_; }
  // rays()[k] is G_k; rays()[0] is unused.
  std::span<const HalfPlane2> rays() const { return rays_; }

 private:
  Point2 apex_;
  std::vector<HalfPlane2> rays_;
  std::vector<HalfPlane2> edges_;
  Tolerances tol_;
};

/// Slabs between consecutive distinct vertex y-values; each slab is crossed by
/// exactly one left-chain and one right-chain edge.
class SortedSlabIndex2 {
 public:
  static SortedSlabIndex2 build(const ConvexPolygon& polygon);

  Containment locate(Point2 p, QueryStats* stats = nullptr) const;

  std::span<const Scalar> levels() const { return levels_; }
  std::size_t slab_count() const { return left_.size(); }
  std::uint32_t left_edge(std::size_t slab) const { return left_[slab]; }
  std::uint32_t right_edge(std::size_t slab) const { return right_[slab]; }

 private:
  std::vector<Scalar> levels_;
  std::vector<std::uint32_t> left_;
  std::vector<std::uint32_t> right_;
  // Horizontal edges at y_min / y_max, if any.
  std::optional<std::uint32_t> bottom_;
  std::optional<std::uint32_t> top_;
  std::vector<HalfPlane2> halfplanes_;
  Tolerances tol_;
};

/// Equal-height horizontal slabs addressed in O(1) by
/// floor((y - y_min) / (y_max - y_min) * n_slabs), clamped to the last slab.
class UniformSlabIndex2 {
 public:
  static constexpr std::size_t kMaxSlabs = std::size_t{1} << 20;

  /// Default slab count: clamp(ceil((y_max - y_min) / min_gap), N, 2^20) where
  /// min_gap is the smallest nonzero difference of sorted vertex y-values.
  static UniformSlabIndex2 build(const ConvexPolygon& polygon,
                                 std::optional<std::size_t> n_slabs = std::nullopt);

  Containment locate(Point2 p, QueryStats* stats = nullptr) const;

  std::size_t slab_count() const { return n_slabs_; }
  std::size_t slab_of(Scalar y) const;
  std::span<const std::uint32_t> left_edges(std::size_t slab) const;
  std::span<const std::uint32_t> right_edges(std::size_t slab) const;
  // Horizontal edges stored in this slab (at most the bottom or top edge).
  std::vector<std::uint32_t> horizontal_edges(std::size_t slab) const;
  std::size_t max_occupancy() const { return max_occupancy_; }
  // The default slab count hit the 2^20 cap; queries remain exact but slabs
  // may hold several edges per side.
  bool cap_exceeded() const { return cap_exceeded_; }

 private:
  struct Horizontal {
    std::size_t slab;
    std::uint32_t edge;
  };

  Scalar y_min_ = 0;
  Scalar y_max_ = 0;
  Scalar scale_ = 0;
  std::size_t n_slabs_ = 0;
  std::vector<std::uint32_t> left_offsets_, left_;
  std::vector<std::uint32_t> right_offsets_, right_;
  std::vector<Horizontal> horizontal_;
  std::vector<HalfPlane2> halfplanes_;
  std::size_t max_occupancy_ = 0;
  bool cap_exceeded_ = false;
  Tolerances tol_;
};

inline WedgeIndex2 build_wedge_index(const ConvexPolygon& polygon) {
  return WedgeIndex2::build(polygon);
}
inline Containment locate_wedge(const WedgeIndex2& index, Point2 p, QueryStats* stats = nullptr) {
  return index.locate(p, stats);
}
inline SortedSlabIndex2 build_sorted_slabs(const ConvexPolygon& polygon) {
  return SortedSlabIndex2::build(polygon);
}
inline Containment locate_sorted_slabs(const SortedSlabIndex2& index, Point2 p,
                                       QueryStats* stats = nullptr) {
  return index.locate(p, stats);
}
inline UniformSlabIndex2 build_uniform_slabs(const ConvexPolygon& polygon,
                                             std::optional<std::size_t> n_slabs = std::nullopt) {
  return UniformSlabIndex2::build(polygon, n_slabs);
}
inline Containment locate_uniform_slabs(const UniformSlabIndex2& index, Point2 p,
                                        QueryStats* stats = nullptr) {
  return index.locate(p, stats);
}

}  // namespace cvxloc
