#include "cvxloc/compare.hpp"

#include <cmath>
#include <memory>
#include <sstream>

#include "cvxloc/baseline.hpp"
#include "cvxloc/cubemap.hpp"
#include "cvxloc/polar.hpp"

namespace cvxloc {

namespace {

std::vector<Scalar> coords(Point2 p) { return {p.x, p.y}; }
std::vector<Scalar> coords(Point3 p) { return {p.x, p.y, p.z}; }

template <class Shape, class Point, class Locator>
MismatchReport compare_impl(const Shape& shape, std::span<const Point> points,
                            std::span<const Locator> methods) {
  MismatchReport report;
  for (const Locator& m : methods) report.methods.push_back(m.name);
  report.points = points.size();
  const Scalar band = 2 * shape.tolerances().eps_q;

  std::vector<Containment> answers(methods.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    const Point p = points[k];
    bool disagree = false;
    for (std::size_t m = 0; m < methods.size(); ++m) {
      answers[m] = methods[m].locate(p);
      disagree = disagree || answers[m] != answers.front();
    }
    const Scalar oracle = min_signed_distance(shape, p);
    if (std::abs(oracle) <= band) {
      ++report.band_points;
      continue;
    }
    if (disagree) report.mismatches.push_back({k, coords(p), oracle, answers});
  }
  return report;
}

}  // namespace

std::string MismatchReport::summary() const {
  std::ostringstream out;
  out << "methods:";
  for (const std::string& m : methods) out << ' ' << m;
  out << "\npoints: " << points << " (boundary band: " << band_points << ")\n";
  out << "mismatches: " << mismatches.size() << '\n';
  for (const Mismatch& mm : mismatches) {
    out << "  #" << mm.index << " (";
    for (std::size_t c = 0; c < mm.point.size(); ++c) out << (c ? ", " : "") << mm.point[c];
    out << ") oracle=" << mm.oracle_distance;
    for (std::size_t m = 0; m < mm.answers.size(); ++m) {
      out << ' ' << methods[m] << '=' << to_string(mm.answers[m]);
    }
    out << '\n';
  }
  return out.str();
}

void MismatchReport::merge(const MismatchReport& other) {
  if (methods.empty()) methods = other.methods;
  points += other.points;
  band_points += other.band_points;
  mismatches.insert(mismatches.end(), other.mismatches.begin(), other.mismatches.end());
}

MismatchReport compare_methods(const ConvexPolygon& polygon, std::span<const Point2> points,
                               std::span<const NamedLocator2> methods) {
  return compare_impl(polygon, points, methods);
}

MismatchReport compare_methods(const ConvexPolyhedron& polyhedron, std::span<const Point3> points,
                               std::span<const NamedLocator3> methods) {
  return compare_impl(polyhedron, points, methods);
}

std::vector<NamedLocator2> standard_locators(const ConvexPolygon& polygon,
                                             std::optional<std::size_t> n_slabs) {
  auto shape = std::make_shared<const ConvexPolygon>(polygon);
  auto wedge = std::make_shared<const WedgeIndex2>(WedgeIndex2::build(polygon));
  auto sorted = std::make_shared<const SortedSlabIndex2>(SortedSlabIndex2::build(polygon));
  auto uniform = std::make_shared<const UniformSlabIndex2>(UniformSlabIndex2::build(polygon, n_slabs));
  auto polar = std::make_shared<const PolarIndex2>(PolarIndex2::build(polygon, {n_slabs, std::nullopt}));
  return {
      {"linear", [shape](Point2 p) { return locate_linear_2d(*shape, p); }},
      {"wedge", [wedge](Point2 p) { return wedge->locate(p); }},
      {"slabs-sorted", [sorted](Point2 p) { return sorted->locate(p); }},
      {"slabs-uniform", [uniform](Point2 p) { return uniform->locate(p); }},
      {"polar", [polar](Point2 p) { return polar->locate(p); }},
  };
}

std::vector<NamedLocator3> standard_locators(const ConvexPolyhedron& polyhedron,
                                             std::optional<std::uint32_t> resolution) {
  auto shape = std::make_shared<const ConvexPolyhedron>(polyhedron);
  auto cubemap = std::make_shared<const CubeMapIndex3>(CubeMapIndex3::build(polyhedron, {resolution, std::nullopt}));
  return {
      {"linear", [shape](Point3 p) { return locate_linear_3d(*shape, p); }},
      {"cubemap", [cubemap](Point3 p) { return cubemap->locate(p); }},
  };
}

}  // namespace cvxloc
