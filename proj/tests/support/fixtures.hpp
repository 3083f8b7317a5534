#pragma once

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "cvxloc/shapes.hpp"

namespace fixtures {

using cvxloc::FaceRing;
using cvxloc::Point2;
using cvxloc::Point3;

inline cvxloc::ConvexPolygon unit_square() {
  return cvxloc::ConvexPolygon::validate({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

inline cvxloc::ConvexPolygon regular_polygon(std::size_t n, double radius = 1,
                                             Point2 center = {0, 0}) {
  std::vector<Point2> v;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    v.push_back({center.x + radius * std::cos(t), center.y + radius * std::sin(t)});
  }
  return cvxloc::ConvexPolygon::validate(std::move(v));
}

inline std::vector<Point3> cube_vertices(double lo = 0, double hi = 1) {
  return {{lo, lo, lo}, {hi, lo, lo}, {hi, hi, lo}, {lo, hi, lo},
          {lo, lo, hi}, {hi, lo, hi}, {hi, hi, hi}, {lo, hi, hi}};
}

// Outward counter-clockwise quads.
inline std::vector<FaceRing> cube_faces() {
  return {{0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4}, {2, 3, 7, 6}, {1, 2, 6, 5}, {0, 4, 7, 3}};
}

inline cvxloc::ConvexPolyhedron unit_cube() {
  return cvxloc::ConvexPolyhedron::validate(cube_vertices(), cube_faces());
}

inline const char* kCubeObj =
    "# unit cube\n"
    "v 0 0 0\nv 1 0 0\nv 1 1 0\nv 0 1 0\nv 0 0 1\nv 1 0 1\nv 1 1 1\nv 0 1 1\n"
    "f 1 4 3 2\nf 5 6 7 8\nf 1 2 6 5\nf 3 4 8 7\nf 2 3 7 6\nf 1 5 8 4\n";

// Quad-mesh torus around the z axis, major radius 2, minor radius 0.5.
inline std::string torus_obj(int rings = 8, int sides = 6) {
  auto num = [](double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
  };
  std::string out;
  for (int i = 0; i < rings; ++i) {
    const double u = 2 * std::numbers::pi * i / rings;
    for (int j = 0; j < sides; ++j) {
      const double w = 2 * std::numbers::pi * j / sides;
      const double r = 2 + 0.5 * std::cos(w);
      out += "v " + num(r * std::cos(u)) + ' ' + num(r * std::sin(u)) + ' ' + num(0.5 * std::sin(w)) +
             '\n';
    }
  }
  auto id = [&](int i, int j) { return (i % rings) * sides + (j % sides) + 1; };
  for (int i = 0; i < rings; ++i) {
    for (int j = 0; j < sides; ++j) {
      out += "f " + std::to_string(id(i, j)) + ' ' + std::to_string(id(i + 1, j)) + ' ' +
             std::to_string(id(i + 1, j + 1)) + ' ' + std::to_string(id(i, j + 1)) + '\n';
    }
  }
  return out;
}

// Unit directions, uniform on the circle / sphere.
inline std::vector<Point2> circle_directions(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
  std::vector<Point2> dirs;
  for (std::size_t k = 0; k < count; ++k) {
    const double t = angle(rng);
    dirs.push_back({std::cos(t), std::sin(t)});
  }
  return dirs;
}

inline std::vector<Point3> sphere_directions(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<Point3> dirs;
  while (dirs.size() < count) {
    const Point3 d{normal(rng), normal(rng), normal(rng)};
    const double len = std::sqrt(d.x * d.x + d.y * d.y + d.z * d.z);
    if (len > 1e-9) dirs.push_back({d.x / len, d.y / len, d.z / len});
  }
  return dirs;
}

// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("cvxloc_test_" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path file(const std::string& name, const std::string& contents) const {
    const auto p = path_ / name;
    std::ofstream(p, std::ios::binary) << contents;
    return p;
  }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace fixtures
