#pragma once

// Cross-checks locators against each other with the O(N) scan as the oracle
// for the boundary distance.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cvxloc/shapes.hpp"

namespace cvxloc {

struct NamedLocator2 {
  std::string name;
  std::function<Containment(Point2)> locate;
};

struct NamedLocator3 {
  std::string name;
  std::function<Containment(Point3)> locate;
};

struct Mismatch {
  std::size_t index = 0;          // position in the query list
  std::vector<Scalar> point;      // coordinates
  Scalar oracle_distance = 0;     // minimal signed distance over all faces
  std::vector<Containment> answers;  // one per method, in method order
};

struct MismatchReport {
  std::vector<std::string> methods;
  std::size_t points = 0;
  // Points within 2 eps_q of the boundary, where methods may legitimately
  // differ by one band step.
  std::size_t band_points = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
  std::string summary() const;
  // Appends `other` (same method list) to this report.
  void merge(const MismatchReport& other);
};

/// Classifies every point with every method. A point is a mismatch when two
/// methods disagree and its oracle distance exceeds 2 eps_q in magnitude.
MismatchReport compare_methods(const ConvexPolygon& polygon, std::span<const Point2> points,
                               std::span<const NamedLocator2> methods);
MismatchReport compare_methods(const ConvexPolyhedron& polyhedron, std::span<const Point3> points,
                               std::span<const NamedLocator3> methods);

/// linear, wedge, slabs-sorted, slabs-uniform and polar locators for a
/// polygon, each owning its index.
std::vector<NamedLocator2> standard_locators(const ConvexPolygon& polygon,
                                             std::optional<std::size_t> n_slabs = std::nullopt);
/// linear and cubemap locators for a polyhedron.
std::vector<NamedLocator3> standard_locators(
    const ConvexPolyhedron& polyhedron, std::optional<std::uint32_t> resolution = std::nullopt);

}  // namespace cvxloc
