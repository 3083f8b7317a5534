#pragma once

// Text formats:
//   polygon  one "x y" pair per line, '#' starts a comment, either winding.
//   OBJ      "v x y z" and "f i j k ..." with 1-based indices; "i/t/n"
//            corners use their first field; other directives are ignored.
//   points   one point per line ("x y" or "x y z"), '#' comments.

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cvxloc/shapes.hpp"

namespace cvxloc {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);

  // 1-based line number, 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

ConvexPolygon parse_polygon(std::istream& in);
ConvexPolygon parse_polygon_file(const std::filesystem::path& path);

ConvexPolyhedron parse_polyhedron_obj(std::istream& in);
ConvexPolyhedron parse_polyhedron_obj(const std::filesystem::path& path);

std::vector<Point2> parse_points2(std::istream& in);
std::vector<Point3> parse_points3(std::istream& in);
std::vector<Point2> parse_points2_file(const std::filesystem::path& path);
std::vector<Point3> parse_points3_file(const std::filesystem::path& path);

// Writers use 17 significant digits so parsing reproduces every coordinate.
void write_polygon(std::ostream& out, const ConvexPolygon& polygon);
void write_obj(std::ostream& out, const ConvexPolyhedron& polyhedron);
void write_points(std::ostream& out, std::span<const Point2> points);
void write_points(std::ostream& out, std::span<const Point3> points);

}  // namespace cvxloc
