#include "cvxloc/cubemap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cvxloc {

namespace {

// Minimal (s, t) extent an overlap must have for a cell to be emitted.
constexpr Scalar kCoverSlack = 1e-12;

constexpr Scalar component(Point3 p, int axis) {
  return axis == 0 ? p.x : (axis == 1 ? p.y : p.z);
}

// (dominant axis, s axis, t axis) for each cube face pair.
constexpr std::array<std::array<int, 3>, 3> kAxes{{{0, 1, 2}, {1, 0, 2}, {2, 0, 1}}};

struct Projection {
  CubeFace face;
  Scalar s;
  Scalar t;
};

inline Projection project_direction(Point3 d) {
  const Scalar ax = std::abs(d.x);
  const Scalar ay = std::abs(d.y);
  const Scalar az = std::abs(d.z);
  if (ax >= ay && ax >= az) {
    return {d.x >= 0 ? CubeFace::PosX : CubeFace::NegX, d.y / ax, d.z / ax};
  }
  if (ay >= az) {
    return {d.y >= 0 ? CubeFace::PosY : CubeFace::NegY, d.x / ay, d.z / ay};
  }
  return {d.z >= 0 ? CubeFace::PosZ : CubeFace::NegZ, d.x / az, d.y / az};
}

inline std::uint32_t grid_index(Scalar s, std::uint32_t resolution) {
  const Scalar g = std::floor((s + 1) * 0.5 * resolution);
  if (!(g > 0)) return 0;
  return g >= resolution ? resolution - 1 : static_cast<std::uint32_t>(g);
}

// Keeps the part of a convex ring where dot(normal, d) >= 0.
void clip_against(std::vector<Point3>& ring, Point3 normal, std::vector<Point3>& scratch) {
  scratch.clear();
  const std::size_t n = ring.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Point3 a = ring[k];
    const Point3 b = ring[(k + 1) % n];
    const Scalar fa = dot(normal, a);
    const Scalar fb = dot(normal, b);
    if (fa >= 0) scratch.push_back(a);
    if ((fa >= 0) != (fb >= 0)) {
      const Scalar t = fa / (fa - fb);
      scratch.push_back(a + t * (b - a));
    }
  }
  ring.swap(scratch);
}

}  // namespace

std::string_view to_string(CubeFace face) {
  switch (face) {
    case CubeFace::PosX:
      return "+X";
    case CubeFace::NegX:
      return "-X";
    case CubeFace::PosY:
      return "+Y";
    case CubeFace::NegY:
      return "-Y";
    case CubeFace::PosZ:
      return "+Z";
    case CubeFace::NegZ:
      return "-Z";
  }
  return "?";
}

CubeCell cubemap_cell(Point3 reference, std::uint32_t resolution, Point3 p, Scalar eps_len) {
  const Point3 d = p - reference;
  if (!(norm(d) > eps_len)) {
    throw GeometryError(ErrorKind::ZeroDirection, "direction from the reference point is zero");
  }
  const Projection pr = project_direction(d);
  return {pr.face, grid_index(pr.s, resolution), grid_index(pr.t, resolution)};
}

std::vector<CubeCell> project_face_conservative(std::span<const Point3> face, Point3 reference,
                                                std::uint32_t resolution) {
  std::vector<CubeCell> cells;
  std::vector<Point3> ring;
  std::vector<Point3> scratch;
  for (int axis_set = 0; axis_set < 3; ++axis_set) {
    const auto [a, b, c] = kAxes[axis_set];
    for (int sign : {1, -1}) {
      ring.clear();
      for (const Point3& v : face) ring.push_back(v - reference);

      // Frustum planes through the reference point: sign*d_a >= |d_b|,
      // sign*d_a >= |d_c| and sign*d_a >= 0.
      auto plane = [&](int axis_b, Scalar coeff_b) {
        Scalar n[3] = {0, 0, 0};
        n[a] = sign;
        if (axis_b >= 0) n[axis_b] = coeff_b;
        return Point3{n[0], n[1], n[2]};
      };
      for (const Point3& normal :
           {plane(b, -1), plane(b, 1), plane(c, -1), plane(c, 1), plane(-1, 0)}) {
        clip_against(ring, normal, scratch);
        if (ring.empty()) break;
      }
      if (ring.empty()) continue;

      Scalar s_lo = 1, s_hi = -1, t_lo = 1, t_hi = -1;
      for (const Point3& d : ring) {
        const Scalar depth = sign * component(d, a);
        if (!(depth > 0)) continue;
        const Scalar s = std::clamp(component(d, b) / depth, Scalar{-1}, Scalar{1});
        const Scalar t = std::clamp(component(d, c) / depth, Scalar{-1}, Scalar{1});
        s_lo = std::min(s_lo, s);
        s_hi = std::max(s_hi, s);
        t_lo = std::min(t_lo, t);
        t_hi = std::max(t_hi, t);
      }
      if (s_hi - s_lo <= 2 * kCoverSlack || t_hi - t_lo <= 2 * kCoverSlack) continue;

      const auto cube_face = static_cast<CubeFace>(2 * axis_set + (sign > 0 ? 0 : 1));
      const std::uint32_t i0 = grid_index(s_lo + kCoverSlack, resolution);
      const std::uint32_t i1 = grid_index(s_hi - kCoverSlack, resolution);
      const std::uint32_t j0 = grid_index(t_lo + kCoverSlack, resolution);
      const std::uint32_t j1 = grid_index(t_hi - kCoverSlack, resolution);
      for (std::uint32_t i = i0; i <= i1; ++i) {
        for (std::uint32_t j = j0; j <= j1; ++j) cells.push_back({cube_face, i, j});
      }
    }
  }
  return cells;
}

std::uint32_t CubeMapIndex3::default_resolution(std::size_t faces) {
  const Scalar r = std::ceil(std::sqrt(kCellsPerFace * static_cast<Scalar>(faces) / 6.0));
  return static_cast<std::uint32_t>(
      std::clamp(r, static_cast<Scalar>(kMinResolution), static_cast<Scalar>(kMaxResolution)));
}

CubeMapIndex3 CubeMapIndex3::build(const ConvexPolyhedron& polyhedron,
                                   const CubeMapOptions& options) {
  CubeMapIndex3 idx;
  idx.tol_ = polyhedron.tolerances();
  idx.face_count_ = polyhedron.size();
  idx.reference_ = options.reference.value_or(centroid(polyhedron));
  const auto halfspaces = polyhedron.halfspaces();
  for (std::size_t f = 0; f < halfspaces.size(); ++f) {
    if (!(eval(halfspaces[f], idx.reference_) > idx.tol_.eps_q)) {
      throw GeometryError(ErrorKind::ReferenceNotInterior,
                          "reference point is not strictly inside face " + std::to_string(f));
    }
  }
  idx.resolution_ = options.resolution.value_or(default_resolution(polyhedron.size()));
  if (idx.resolution_ == 0) {
    throw GeometryError(ErrorKind::InvalidArgument, "resolution must be positive");
  }
  idx.reject_box_ = polyhedron.aabb().expanded(idx.tol_.eps_q);

  const std::size_t cells = 6 * static_cast<std::size_t>(idx.resolution_) * idx.resolution_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> hits;  // (cell, face)
  for (std::size_t f = 0; f < polyhedron.size(); ++f) {
    const auto pts = polyhedron.face_points(f);
    for (const CubeCell& cell : project_face_conservative(pts, idx.reference_, idx.resolution_)) {
      hits.emplace_back(static_cast<std::uint32_t>(idx.cell_index(cell)),
                        static_cast<std::uint32_t>(f));
    }
  }

  idx.offsets_.assign(cells + 1, 0);
  for (const auto& [cell, face] : hits) ++idx.offsets_[cell + 1];
  for (std::size_t c = 0; c < cells; ++c) idx.offsets_[c + 1] += idx.offsets_[c];
  idx.faces_.resize(hits.size());
  idx.candidates_.resize(hits.size());
  std::vector<std::uint32_t> cursor(idx.offsets_.begin(), idx.offsets_.end() - 1);
  for (const auto& [cell, face] : hits) {
    const std::uint32_t at = cursor[cell]++;
    idx.faces_[at] = face;
    idx.candidates_[at] = halfspaces[face];
  }
  for (std::size_t c = 0; c < cells; ++c) {
    if (idx.offsets_[c + 1] == idx.offsets_[c]) {
      throw std::logic_error("cube-map cell " + std::to_string(c) + " received no face");
    }
    idx.max_occupancy_ =
        std::max<std::size_t>(idx.max_occupancy_, idx.offsets_[c + 1] - idx.offsets_[c]);
  }
  return idx;
}

Containment CubeMapIndex3::locate(Point3 p, QueryStats* stats) const {
  if (!reject_box_.contains(p)) return Containment::Outside;
  const Point3 d = p - reference_;
  if (std::abs(d.x) + std::abs(d.y) + std::abs(d.z) <= tol_.eps_len) return Containment::Inside;
  const Projection pr = project_direction(d);
  const std::size_t cell =
      (static_cast<std::size_t>(pr.face) * resolution_ + grid_index(pr.s, resolution_)) *
          resolution_ +
      grid_index(pr.t, resolution_);
  const std::uint32_t begin = offsets_[cell];
  const std::uint32_t end = offsets_[cell + 1];
  Scalar best = eval(candidates_[begin], p);
  std::uint32_t k = begin + 1;
  for (; best >= -tol_.eps_q && k < end; ++k) best = std::min(best, eval(candidates_[k], p));
  if (stats) stats->evaluations += k - begin;
  return classify(best, tol_.eps_q);
}

}  // namespace cvxloc
