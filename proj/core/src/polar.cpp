#include "cvxloc/polar.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <string>

namespace cvxloc {

Scalar boundary_param(const Aabb2& box, Point2 reference, Point2 p, Scalar eps_len) {
  const Point2 d = p - reference;
  if (!(norm(d) > eps_len)) {
    throw GeometryError(ErrorKind::ZeroDirection, "direction from the reference point is zero");
  }
  const Scalar w = box.width();
  const Scalar h = box.height();
  const Scalar to_x = d.x >= 0 ? box.max.x - reference.x : reference.x - box.min.x;
  const Scalar to_y = d.y >= 0 ? box.max.y - reference.y : reference.y - box.min.y;
  const Scalar ax = std::abs(d.x);
  const Scalar ay = std::abs(d.y);
  Scalar u;
  if (ax * to_y >= ay * to_x) {
    const Scalar y = std::clamp(reference.y + d.y * (to_x / ax), box.min.y, box.max.y);
    u = d.x >= 0 ? y - box.min.y : h + w + (box.max.y - y);
  } else {
    const Scalar x = std::clamp(reference.x + d.x * (to_y / ay), box.min.x, box.max.x);
    u = d.y >= 0 ? h + (box.max.x - x) : 2 * h + w + (x - box.min.x);
  }
  const Scalar perimeter = 2 * (w + h);
  return u >= perimeter ? u - perimeter : u;
}

PolarIndex2 PolarIndex2::build(const ConvexPolygon& polygon, const PolarOptions& options) {
  PolarIndex2 idx;
  idx.tol_ = polygon.tolerances();
  idx.edge_count_ = polygon.size();
  idx.reference_ = options.reference.value_or(centroid(polygon));
  const auto halfplanes = polygon.halfplanes();
  for (std::size_t i = 0; i < halfplanes.size(); ++i) {
    if (!(eval(halfplanes[i], idx.reference_) > idx.tol_.eps_q)) {
      throw GeometryError(ErrorKind::ReferenceNotInterior,
                          "reference point is not strictly inside edge " + std::to_string(i));
    }
  }

  idx.box_ = polygon.aabb().scaled(kBoxInflation);
  idx.width_ = idx.box_.width();
  idx.height_ = idx.box_.height();
  idx.perimeter_ = 2 * (idx.width_ + idx.height_);

  const auto v = polygon.vertices();
  const std::size_t n = v.size();
  std::vector<Scalar> u(n);
  for (std::size_t j = 0; j < n; ++j) u[j] = idx.param_of_direction(v[j] - idx.reference_);

  if (options.n_slabs) {
    if (*options.n_slabs == 0) {
      throw GeometryError(ErrorKind::InvalidArgument, "n_slabs must be positive");
    }
    idx.n_slabs_ = *options.n_slabs;
  } else {
    // Slab width must not exceed the smallest perimeter gap between
    // consecutive vertex directions, so a slab holds at most one vertex.
    // The edge-length proxy below is kept as an additional lower bound.
    Scalar min_edge = std::numeric_limits<Scalar>::infinity();
    Scalar min_mid = std::numeric_limits<Scalar>::infinity();
    Scalar max_vertex = 0;
    Scalar min_gap = std::numeric_limits<Scalar>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      const Point2 a = v[j];
      const Point2 b = v[(j + 1) % n];
      min_edge = std::min(min_edge, norm(b - a));
      min_mid = std::min(min_mid, norm(0.5 * (a + b) - idx.reference_));
      max_vertex = std::max(max_vertex, norm(a - idx.reference_));
      Scalar gap = u[(j + 1) % n] - u[j];
      if (gap < 0) gap += idx.perimeter_;
      min_gap = std::min(min_gap, gap);
    }
    const Scalar proxy = min_edge * (min_mid / max_vertex);
    const Scalar ell = std::min(proxy, min_gap);
    const Scalar wanted = std::ceil(idx.perimeter_ / ell) + 1;
    const Scalar target = std::max(static_cast<Scalar>(4 * n), wanted);
    idx.cap_exceeded_ = !(target <= static_cast<Scalar>(kMaxSlabs));
    idx.n_slabs_ = idx.cap_exceeded_ ? kMaxSlabs
                                     : std::max(n, static_cast<std::size_t>(target));
  }
  idx.scale_ = static_cast<Scalar>(idx.n_slabs_) / idx.perimeter_;

  // Closed slab interval per edge, wrapped across u = 0 when needed. A
  // wrapped interval whose two pieces overlap covers every slab.
  const std::size_t slabs = idx.n_slabs_;
  struct Piece {
    std::size_t lo, hi;
  };
  std::vector<std::array<Piece, 2>> pieces(n);
  std::vector<std::uint8_t> piece_count(n);
  std::vector<std::uint32_t> counts(slabs + 1, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const Scalar ua = u[j];
    const Scalar ub = u[(j + 1) % n];
    const std::size_t s0 = idx.slab_of_param(ua);
    const std::size_t s1 = idx.slab_of_param(ub);
    if (ub >= ua) {
      pieces[j] = {{{s0, s1}, {}}};
      piece_count[j] = 1;
    } else if (s1 >= s0) {
      pieces[j] = {{{0, slabs - 1}, {}}};
      piece_count[j] = 1;
    } else {
      pieces[j] = {{{s0, slabs - 1}, {0, s1}}};
      piece_count[j] = 2;
    }
    for (std::size_t k = 0; k < piece_count[j]; ++k) {
      ++counts[pieces[j][k].lo];
      --counts[pieces[j][k].hi + 1];
    }
  }

  // Per-slab lists in ascending edge order.
  std::vector<std::uint32_t> offsets(slabs + 1, 0);
  std::uint32_t running = 0;
  for (std::size_t s = 0; s < slabs; ++s) {
    running += counts[s];
    offsets[s + 1] = offsets[s] + running;
  }
  std::vector<std::uint32_t> lists(offsets[slabs]);
  std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < piece_count[j]; ++k) {
      for (std::size_t s = pieces[j][k].lo; s <= pieces[j][k].hi; ++s) {
        lists[cursor[s]++] = static_cast<std::uint32_t>(j);
      }
    }
  }

  // Seen from an interior point the edges of a slab are consecutive modulo
  // N, so each list collapses to (first, count).
  idx.halfplanes_.assign(halfplanes.begin(), halfplanes.end());
  idx.slabs_.resize(slabs);
  std::size_t total = 0;
  for (std::size_t s = 0; s < slabs; ++s) {
    const std::uint32_t* list = lists.data() + offsets[s];
    const std::uint32_t count = offsets[s + 1] - offsets[s];
    if (count == 0) throw std::logic_error("polar slab " + std::to_string(s) + " is empty");
    std::uint32_t first = list[0];
    std::size_t gaps = 0;
    for (std::uint32_t k = 1; k < count; ++k) {
      if (list[k] != list[k - 1] + 1) {
        first = list[k];
        ++gaps;
      }
    }
    if (gaps > 1 || (gaps == 1 && (list[0] != 0 || list[count - 1] != n - 1))) {
      throw std::logic_error("polar slab " + std::to_string(s) + " is not a consecutive run");
    }
    const HalfPlane2& h0 = halfplanes[first];
    const HalfPlane2& h1 = count > 1 ? halfplanes[(first + 1) % n] : h0;
    idx.slabs_[s] = {{h0, h1}, first, count};
    idx.max_occupancy_ = std::max<std::size_t>(idx.max_occupancy_, count);
    total += count;
  }
  idx.total_candidates_ = total;
  return idx;
}

std::vector<std::uint32_t> PolarIndex2::slab_edges(std::size_t slab) const {
  const Slab s = slabs_.at(slab);
  std::vector<std::uint32_t> edges(s.count);
  for (std::uint32_t k = 0; k < s.count; ++k) {
    edges[k] = static_cast<std::uint32_t>((s.first + k) % edge_count_);
  }
  return edges;
}

std::size_t PolarIndex2::slab_of(Point2 p) const {
  const Point2 d = p - reference_;
  if (!(norm(d) > tol_.eps_len)) {
    throw GeometryError(ErrorKind::ZeroDirection, "direction from the reference point is zero");
  }
  return slab_of_param(param_of_direction(d));
}

}  // namespace cvxloc
