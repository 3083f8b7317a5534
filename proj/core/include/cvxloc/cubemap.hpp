#pragma once

// Constant-time point-in-convex-polyhedron location by a cube map of
// directions around an interior reference point.
//
// A direction d is assigned to the cube face of its dominant axis; the other
// two components divided by the dominant magnitude give (s, t) in [-1, 1]²,
// which an R x R grid splits into cells. Each cell lists every face whose
// central projection from the reference point overlaps it, so a query only
// evaluates the faces of one cell.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cvxloc/shapes.hpp"

namespace cvxloc {

enum class CubeFace : std::uint8_t { PosX, NegX, PosY, NegY, PosZ, NegZ };

std::string_view to_string(CubeFace face);

struct CubeCell {
  CubeFace face = CubeFace::PosX;
  std::uint32_t i = 0;
  std::uint32_t j = 0;

  friend auto operator<=>(const CubeCell&, const CubeCell&) = default;
};

/// Cube-map cell of direction p - reference at resolution R. Ties between
/// component magnitudes go to the earlier axis in X, Y, Z order. Throws
/// ZeroDirection if |p - reference| <= eps_len.
CubeCell cubemap_cell(Point3 reference, std::uint32_t resolution, Point3 p, Scalar eps_len = 0);

/// Cells a face may cover, seen from `reference`. The face is clipped against
/// the view frustum of each cube face, its clipped vertices are projected to
/// (s, t), and every cell overlapped by their bounding rectangle is emitted.
/// Overlaps thinner than kCoverSlack in (s, t) are ignored, so faces that only
/// touch a frustum along an edge do not leak into it.
std::vector<CubeCell> project_face_conservative(std::span<const Point3> face, Point3 reference,
                                                std::uint32_t resolution);

struct CubeMapOptions {
  std::optional<std::uint32_t> resolution;
  std::optional<Point3> reference;
};

class CubeMapIndex3 {
 public:
  static constexpr std::uint32_t kMinResolution = 4;
  static constexpr std::uint32_t kMaxResolution = 1024;
  static constexpr Scalar kCellsPerFace = 4;  // kappa in R = ceil(sqrt(kappa * N / 6))

  /// Default resolution for a polyhedron with `faces` faces.
  static std::uint32_t default_resolution(std::size_t faces);

  static CubeMapIndex3 build(const ConvexPolyhedron& polyhedron,
                             const CubeMapOptions& options = {});

  Containment locate(Point3 p, QueryStats* stats = nullptr) const;

  std::size_t size() const { return face_count_; }
  std::uint32_t resolution() const { return resolution_; }
  Point3 reference() const { return reference_; }
  std::size_t cell_count() const { return offsets_.size() - 1; }
  std::size_t cell_index(const CubeCell& cell) const {
    return (static_cast<std::size_t>(cell.face) * resolution_ + cell.i) * resolution_ + cell.j;
  }
  std::span<const std::uint32_t> cell_faces(const CubeCell& cell) const {
    const std::size_t c = cell_index(cell);
    return std::span(faces_).subspan(offsets_[c], offsets_[c + 1] - offsets_[c]);
  }
  std::size_t max_occupancy() const { return max_occupancy_; }
  double mean_occupancy() const {
    return static_cast<double>(faces_.size()) / static_cast<double>(cell_count());
  }

 private:
  Point3 reference_;
  Aabb3 reject_box_;
  std::uint32_t resolution_ = 0;
  std::size_t face_count_ = 0;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> faces_;
  std::vector<HalfSpace3> candidates_;
  std::size_t max_occupancy_ = 0;
  Tolerances tol_;
};

inline CubeMapIndex3 build_cubemap_index(const ConvexPolyhedron& polyhedron,
                                         std::optional<std::uint32_t> resolution = std::nullopt,
                                         std::optional<Point3> reference = std::nullopt) {
  return CubeMapIndex3::build(polyhedron, {resolution, reference});
}

inline Containment locate_cubemap(const CubeMapIndex3& index, Point3 p,
                                  QueryStats* stats = nullptr) {
  return index.locate(p, stats);
}

}  // namespace cvxloc
