#include "cvxloc/io.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

namespace cvxloc {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

Scalar to_scalar(std::string_view token, std::size_t line) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  Scalar value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size()) {
    throw ParseError(line, "invalid number '" + std::string(token) + "'");
  }
  return value;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return in;
}

template <std::size_t Dim>
std::vector<std::array<Scalar, Dim>> parse_rows(std::istream& in) {
  std::vector<std::array<Scalar, Dim>> rows;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto tokens = split(strip_comment(line));
    if (tokens.empty()) continue;
    if (tokens.size() != Dim) {
      throw ParseError(number, "expected " + std::to_string(Dim) + " coordinates, found " +
                                   std::to_string(tokens.size()));
    }
    std::array<Scalar, Dim> row{};
    for (std::size_t k = 0; k < Dim; ++k) row[k] = to_scalar(tokens[k], number);
    rows.push_back(row);
  }
  return rows;
}

void put(std::ostream& out, Scalar v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out << buf;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

ConvexPolygon parse_polygon(std::istream& in) {
  std::vector<Point2> vertices;
  for (const auto& row : parse_rows<2>(in)) vertices.push_back({row[0], row[1]});
  return ConvexPolygon::validate(std::move(vertices));
}

ConvexPolygon parse_polygon_file(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_polygon(in);
}

ConvexPolyhedron parse_polyhedron_obj(std::istream& in) {
  std::vector<Point3> vertices;
  std::vector<FaceRing> faces;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto tokens = split(strip_comment(line));
    if (tokens.empty()) continue;
    if (tokens[0] == "v") {
      if (tokens.size() != 4 && tokens.size() != 5) {
        throw ParseError(number, "vertex needs 3 coordinates");
      }
      vertices.push_back({to_scalar(tokens[1], number), to_scalar(tokens[2], number),
                          to_scalar(tokens[3], number)});
    } else if (tokens[0] == "f") {
      if (tokens.size() < 4) throw ParseError(number, "face needs at least 3 vertices");
      FaceRing ring;
      for (std::size_t k = 1; k < tokens.size(); ++k) {
        const std::string_view corner = tokens[k].substr(0, tokens[k].find('/'));
        long long index = 0;
        const auto [end, ec] =
            std::from_chars(corner.data(), corner.data() + corner.size(), index);
        if (ec != std::errc{} || end != corner.data() + corner.size()) {
          throw ParseError(number, "invalid face index '" + std::string(tokens[k]) + "'");
        }
        if (index <= 0) {
          throw ParseError(number, "face indices must be positive, found " + std::to_string(index));
        }
        ring.push_back(static_cast<std::uint32_t>(index - 1));
      }
      faces.push_back(std::move(ring));
    }
  }
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (std::uint32_t idx : faces[f]) {
      if (idx >= vertices.size()) {
        throw ParseError(0, "face " + std::to_string(f + 1) + " references vertex " +
                                std::to_string(idx + 1) + " of " +
                                std::to_string(vertices.size()));
      }
    }
  }
  return ConvexPolyhedron::validate(std::move(vertices), std::move(faces));
}

ConvexPolyhedron parse_polyhedron_obj(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_polyhedron_obj(in);
}

std::vector<Point2> parse_points2(std::istream& in) {
  std::vector<Point2> pts;
  for (const auto& row : parse_rows<2>(in)) pts.push_back({row[0], row[1]});
  return pts;
}

std::vector<Point3> parse_points3(std::istream& in) {
  std::vector<Point3> pts;
  for (const auto& row : parse_rows<3>(in)) pts.push_back({row[0], row[1], row[2]});
  return pts;
}

std::vector<Point2> parse_points2_file(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_points2(in);
}

std::vector<Point3> parse_points3_file(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_points3(in);
}

void write_polygon(std::ostream& out, const ConvexPolygon& polygon) {
  out << "# convex polygon, " << polygon.size() << " vertices, counter-clockwise\n";
  for (const Point2& v : polygon.vertices()) {
    put(out, v.x);
    out << ' ';
    put(out, v.y);
    out << '\n';
  }
}

void write_obj(std::ostream& out, const ConvexPolyhedron& polyhedron) {
  out << "# convex polyhedron, " << polyhedron.vertices().size() << " vertices, "
      << polyhedron.size() << " faces\n";
  for (const Point3& v : polyhedron.vertices()) {
    out << "v ";
    put(out, v.x);
    out << ' ';
    put(out, v.y);
    out << ' ';
    put(out, v.z);
    out << '\n';
  }
  for (const FaceRing& ring : polyhedron.faces()) {
    out << 'f';
    for (std::uint32_t idx : ring) out << ' ' << idx + 1;
    out << '\n';
  }
}

void write_points(std::ostream& out, std::span<const Point2> points) {
  for (const Point2& p : points) {
    put(out, p.x);
    out << ' ';
    put(out, p.y);
    out << '\n';
  }
}

void write_points(std::ostream& out, std::span<const Point3> points) {
  for (const Point3& p : points) {
    put(out, p.x);
    out << ' ';
    put(out, p.y);
    out << ' ';
    put(out, p.z);
    out << '\n';
  }
}

}  // namespace cvxloc
