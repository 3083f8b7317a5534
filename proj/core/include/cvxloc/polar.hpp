#pragma once

// Constant-time point-in-convex-polygon location by angular slabs around an
// interior reference point.
//
// Directions from the reference point are parametrized by where the ray
// leaves a bounding box: the counter-clockwise arc length u along the box
// perimeter, starting at corner (x_max, y_min). u is monotone in the ray
// angle, so uniform slabs in u are angular sectors and the slab of a query is
// found with one division and a floor, without trigonometry.
//
// Each slab stores every edge whose angular interval (seen from the reference
// point) overlaps the slab. A query is Inside only if it is inside all
// candidates of its slab. This is exact for a convex polygon: an interior
// point satisfies all N half-planes, and an exterior point lies beyond the
// edge where its ray from the reference point leaves the polygon, which is a
// candidate of its slab by construction.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cvxloc/memory.hpp"
#include "cvxloc/shapes.hpp"

namespace cvxloc {

/// Perimeter coordinate u in [0, U) of the exit point of the ray
/// reference -> p through `box`. Throws ZeroDirection if
/// |p - reference| <= eps_len.
Scalar boundary_param(const Aabb2& box, Point2 reference, Point2 p, Scalar eps_len = 0);

struct PolarOptions {
  std::optional<std::size_t> n_slabs;
  std::optional<Point2> reference;
};

class PolarIndex2 {
 public:
  static constexpr std::size_t kMaxSlabs = std::size_t{1} << 20;
  // Relative growth of the polygon box used for the perimeter parametrization.
  static constexpr Scalar kBoxInflation = 1.01;

  static PolarIndex2 build(const ConvexPolygon& polygon, const PolarOptions& options = {});

  Containment locate(Point2 p, QueryStats* stats = nullptr) const {
    if (!box_.contains(p)) return Containment::Outside;
    const Point2 d = p - reference_;
    if (std::abs(d.x) + std::abs(d.y) <= tol_.eps_len) return Containment::Inside;
    const Slab& slab = slabs_[slab_of_param(param_of_direction(d))];
    Scalar best = std::min(eval(slab.head[0], p), eval(slab.head[1], p));
    std::uint32_t k = 2;
    for (; k < slab.count && best >= -tol_.eps_q; ++k) {
      std::uint32_t e = slab.first + k;
      if (e >= edge_count_) e -= static_cast<std::uint32_t>(edge_count_);
      best = std::min(best, eval(halfplanes_[e], p));
    }
    if (stats) stats->evaluations += k;
    return classify(best, tol_.eps_q);
  }

  /// Slab containing the direction of p as seen from the reference point.
  std::size_t slab_of(Point2 p) const;
  /// Candidate edges of a slab in counter-clockwise order.
  std::vector<std::uint32_t> slab_edges(std::size_t slab) const;

  std::size_t size() const { return edge_count_; }
  std::size_t slab_count() const { return n_slabs_; }
  Point2 reference() const { return reference_; }
  const Aabb2& box() const { return box_; }
  Scalar perimeter() const { return perimeter_; }
  std::size_t max_occupancy() const { return max_occupancy_; }
  double mean_occupancy() const {
    return static_cast<double>(total_candidates_) / static_cast<double>(n_slabs_);
  }
  // Default slab count wanted more than kMaxSlabs.
  bool cap_exceeded() const { return cap_exceeded_; }

 private:
  friend struct PolarIndexTestPeer;

  // Unwrapped perimeter coordinate in [0, U] of a nonzero direction.
  Scalar param_of_direction(Point2 d) const;
  std::size_t slab_of_param(Scalar u) const;

  Point2 reference_;
  Aabb2 box_;
  Scalar width_ = 0;
  Scalar height_ = 0;
  Scalar perimeter_ = 0;
  Scalar scale_ = 0;  // n_slabs / perimeter
  std::size_t n_slabs_ = 0;
  std::size_t edge_count_ = 0;
  // Each slab's candidates are the consecutive edges first, first + 1, ...
  // (mod N), count of them. The first two half-planes are copied into the
  // record (the first twice when count is 1), so a slab with at most two
  // candidates is answered from one cache line.
  struct alignas(64) Slab {
    HalfPlane2 head[2];
    std::uint32_t first;
    std::uint32_t count;
  };
  TableVector<Slab> slabs_;
  TableVector<HalfPlane2> halfplanes_;
  std::size_t total_candidates_ = 0;
  std::size_t max_occupancy_ = 0;
  bool cap_exceeded_ = false;
  Tolerances tol_;
};

inline PolarIndex2 build_polar_index(const ConvexPolygon& polygon,
                                     std::optional<std::size_t> n_slabs = std::nullopt,
                                     std::optional<Point2> reference = std::nullopt) {
  return PolarIndex2::build(polygon, {n_slabs, reference});
}

inline Containment locate_polar(const PolarIndex2& index, Point2 p, QueryStats* stats = nullptr) {
  return index.locate(p, stats);
}

inline Scalar PolarIndex2::param_of_direction(Point2 d) const {
  const bool right = d.x >= 0;
  const bool up = d.y >= 0;
  const Scalar to_x = right ? box_.max.x - reference_.x : reference_.x - box_.min.x;
  const Scalar to_y = up ? box_.max.y - reference_.y : reference_.y - box_.min.y;
  const Scalar ax = std::abs(d.x);
  const Scalar ay = std::abs(d.y);
  // Exit through the right or left side, otherwise through the top or bottom.
  const bool vertical_side = ax * to_y >= ay * to_x;
  const Scalar t = (vertical_side ? to_x : to_y) / (vertical_side ? ax : ay);
  const Scalar y = std::clamp(reference_.y + d.y * t, box_.min.y, box_.max.y);
  const Scalar x = std::clamp(reference_.x + d.x * t, box_.min.x, box_.max.x);
  const Scalar u_side = right ? y - box_.min.y : height_ + width_ + (box_.max.y - y);
  const Scalar u_cap = up ? height_ + (box_.max.x - x) : 2 * height_ + width_ + (x - box_.min.x);
  return vertical_side ? u_side : u_cap;
}

inline std::size_t PolarIndex2::slab_of_param(Scalar u) const {
  const Scalar t = std::floor(u * scale_);
  if (!(t > 0)) return 0;
  return t >= static_cast<Scalar>(n_slabs_) ? n_slabs_ - 1 : static_cast<std::size_t>(t);
}

}  // namespace cvxloc
