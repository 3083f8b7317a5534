#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "cvxloc/generators.hpp"
#include "cvxloc/geometry.hpp"
#include "support/fixtures.hpp"

using namespace cvxloc;

namespace {

void expect_halfplane(const HalfPlane2& h, Scalar a, Scalar b, Scalar c) {
  EXPECT_NEAR(h.a, a, 1e-15);
  EXPECT_NEAR(h.b, b, 1e-15);
  EXPECT_NEAR(h.c, c, 1e-15);
}

}  // namespace

TEST(HalfPlaneFromEdge, LeftOfPositiveXAxis) {
  expect_halfplane(halfplane_from_edge({0, 0}, {1, 0}), 0, 1, 0);
}

TEST(HalfPlaneFromEdge, LeftOfUpwardEdgeAtXEqualsOne) {
  expect_halfplane(halfplane_from_edge({1, 0}, {1, 1}), -1, 0, 1);
}

TEST(HalfPlaneFromEdge, RejectsCoincidentEndpoints) {
  try {
    halfplane_from_edge({0.5, 0.5}, {0.5, 0.5 + 1e-15}, 1e-12);
    FAIL() << "expected DegenerateEdge";
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateEdge);
  }
}

TEST(HalfPlaneFromEdge, RandomEdgesContainTheirLeftSide) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coord(-100, 100);
  for (int k = 0; k < 1000; ++k) {
    const Point2 p{coord(rng), coord(rng)};
    const Point2 q{coord(rng), coord(rng)};
    const HalfPlane2 h = halfplane_from_edge(p, q);
    EXPECT_NEAR(h.a * h.a + h.b * h.b, 1, 1e-12);
    // Left normal computed independently of the library.
    const double len = std::hypot(q.x - p.x, q.y - p.y);
    const Point2 left{-(q.y - p.y) / len, (q.x - p.x) / len};
    const Point2 mid{(p.x + q.x) / 2, (p.y + q.y) / 2};
    const double delta = 1e-3;
    EXPECT_GT(eval(h, {mid.x + delta * left.x, mid.y + delta * left.y}), 0);
    EXPECT_LT(eval(h, {mid.x - delta * left.x, mid.y - delta * left.y}), 0);
    EXPECT_NEAR(eval(h, p), 0, 1e-12);
    EXPECT_NEAR(eval(h, q), 0, 1e-12);
  }
}

TEST(HalfSpaceFromFace, UnitSquareAtZeroFacingUp) {
  const std::vector<Point3> face{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
  const HalfSpace3 h = halfspace_from_face(face, {0.5, 0.5, 0.5});
  EXPECT_NEAR(h.a, 0, 1e-15);
  EXPECT_NEAR(h.b, 0, 1e-15);
  EXPECT_NEAR(h.c, 1, 1e-15);
  EXPECT_NEAR(h.d, 0, 1e-15);
}

TEST(HalfSpaceFromFace, FlipsTowardsTheInterior) {
  const std::vector<Point3> face{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
  const HalfSpace3 h = halfspace_from_face(face, {0.5, 0.5, -0.5});
  EXPECT_NEAR(h.c, -1, 1e-15);
  EXPECT_NEAR(h.d, 0, 1e-15);
}

TEST(HalfSpaceFromFace, IcosahedronFacesAllContainTheOrigin) {
  const ConvexPolyhedron ico = gen_convex_polyhedron({0, 0, Affine3::identity()});
  ASSERT_EQ(ico.size(), 20u);
  for (std::size_t f = 0; f < ico.size(); ++f) {
    const auto pts = ico.face_points(f);
    const HalfSpace3 h = halfspace_from_face(pts, {0, 0, 0});
    EXPECT_GT(eval(h, {0, 0, 0}), 0);
    EXPECT_NEAR(h.a * h.a + h.b * h.b + h.c * h.c, 1, 1e-12);
  }
}

TEST(HalfSpaceFromFace, Errors) {
  const std::vector<Point3> collinear{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}};
  const std::vector<Point3> warped{{0, 0, 0}, {1, 0, 0}, {1, 1, 0.1}, {0, 1, 0}};
  const std::vector<Point3> square{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
  auto kind_of = [](auto fn) {
    try {
      fn();
    } catch (const GeometryError& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  EXPECT_EQ(kind_of([&] { halfspace_from_face(collinear, {0, 1, 0}); }), ErrorKind::DegenerateFace);
  EXPECT_EQ(kind_of([&] { halfspace_from_face(warped, {0.5, 0.5, 1}); }), ErrorKind::NonPlanarFace);
  EXPECT_EQ(kind_of([&] { halfspace_from_face(square, {3, 3, 0}); }), ErrorKind::InteriorOnPlane);
}

TEST(Eval, SignedDistances) {
  EXPECT_EQ(eval(HalfPlane2{0, 1, 0}, {5, 2}), 2);
  EXPECT_EQ(eval(HalfSpace3{0, 0, 1, 0}, {1, 1, -3}), -3);
}

TEST(Eval, PointsOnTheLineEvaluateToZero) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int k = 0; k < 200; ++k) {
    const Point2 p{u(rng), u(rng)};
    const Point2 q{u(rng), u(rng)};
    const HalfPlane2 h = halfplane_from_edge(p, q);
    const double t = u(rng) / 10;
    const Point2 on{p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
    EXPECT_NEAR(eval(h, on), 0, 1e-12 * 20);
  }
}

TEST(Classify, Bands) {
  EXPECT_EQ(classify(1e-8, 1e-9), Containment::Inside);
  EXPECT_EQ(classify(1e-9, 1e-9), Containment::OnBoundary);
  EXPECT_EQ(classify(0, 1e-9), Containment::OnBoundary);
  EXPECT_EQ(classify(-1e-9, 1e-9), Containment::OnBoundary);
  EXPECT_EQ(classify(-2e-9, 1e-9), Containment::Outside);
  EXPECT_EQ(classify(std::numeric_limits<double>::quiet_NaN(), 1e-9), Containment::Outside);
}

TEST(Tolerances, ScaleWithTheDiagonal) {
  const auto t = Tolerances::for_diagonal(10);
  EXPECT_DOUBLE_EQ(t.eps_len, 1e-11);
  EXPECT_DOUBLE_EQ(t.eps_plane, 1e-8);
  EXPECT_DOUBLE_EQ(t.eps_q, 1e-8);
}

TEST(Aabb, ScaledKeepsTheCenter) {
  const Aabb2 box{{0, 0}, {2, 4}};
  const Aabb2 s = box.scaled(1.5);
  EXPECT_DOUBLE_EQ(s.min.x, -0.5);
  EXPECT_DOUBLE_EQ(s.max.y, 5);
  EXPECT_EQ(s.center(), box.center());
}

TEST(NewellNormal, MatchesTheCrossProductOfAPlanarQuad) {
  const std::vector<Point3> quad{{0, 0, 0}, {2, 0, 0}, {2, 3, 0}, {0, 3, 0}};
  const Point3 n = newell_normal(quad);
  EXPECT_DOUBLE_EQ(n.x, 0);
  EXPECT_DOUBLE_EQ(n.y, 0);
  EXPECT_GT(n.z, 0);
}
