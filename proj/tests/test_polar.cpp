#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cvxloc/baseline.hpp"
#include "cvxloc/compare.hpp"
#include "cvxloc/generators.hpp"
#include "cvxloc/polar.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace cvxloc {

// Reaches into the slab table to build deliberately broken indexes.
struct PolarIndexTestPeer {
  // Leaves `slab` with the single edge opposite `edge`.
  static void replace_with_opposite(PolarIndex2& index, std::size_t slab, std::uint32_t edge) {
    auto& s = index.slabs_[slab];
    s.first = static_cast<std::uint32_t>((edge + index.edge_count_ / 2) % index.edge_count_);
    s.count = 1;
    s.head[0] = s.head[1] = index.halfplanes_[s.first];
  }
};

}  // namespace cvxloc

using namespace cvxloc;

namespace {

bool contains(const std::vector<std::uint32_t>& list, std::size_t e) {
  return std::find(list.begin(), list.end(), static_cast<std::uint32_t>(e)) != list.end();
}

}  // namespace

TEST(BoundaryParam, RightSide) {
  EXPECT_NEAR(boundary_param({{0, 0}, {1, 1}}, {0.5, 0.5}, {1.0, 0.75}), 0.75, 1e-15);
}

TEST(BoundaryParam, TopSide) {
  EXPECT_NEAR(boundary_param({{0, 0}, {1, 1}}, {0.5, 0.5}, {0.5, 2.0}), 1.5, 1e-15);
}

TEST(BoundaryParam, LeftAndBottomSides) {
  const Aabb2 box{{0, 0}, {1, 1}};
  EXPECT_NEAR(boundary_param(box, {0.5, 0.5}, {0, 0.25}), 2.75, 1e-15);
  EXPECT_NEAR(boundary_param(box, {0.5, 0.5}, {0.25, 0.0}), 3.25, 1e-15);
  EXPECT_NEAR(boundary_param(box, {0.5, 0.5}, {0.75, 0.0}), 3.75, 1e-15);
}

TEST(BoundaryParam, ZeroDirectionThrows) {
  try {
    boundary_param({{0, 0}, {1, 1}}, {0.5, 0.5}, {0.5, 0.5}, 1e-12);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroDirection);
  }
}

TEST(BoundaryParam, IsMonotoneInTheRayAngle) {
  const Aabb2 box{{-1.3, -0.4}, {2.1, 0.9}};
  const Point2 ref{0.2, 0.1};
  // Start just after the direction of the (x_max, y_min) corner.
  const double start = std::atan2(box.min.y - ref.y, box.max.x - ref.x);
  const int steps = 1'000'000;
  double prev = -1;
  for (int k = 1; k < steps; ++k) {
    const double t = start + 2 * std::numbers::pi * k / steps;
    const double u = boundary_param(box, ref, {ref.x + std::cos(t), ref.y + std::sin(t)});
    ASSERT_GT(u, prev) << "k=" << k;
    ASSERT_LT(u, 2 * (box.max.x - box.min.x + box.max.y - box.min.y));
    prev = u;
  }
}

TEST(PolarIndex, UnitSquareWithEightSlabs) {
  const auto sq = fixtures::unit_square();
  const auto idx = build_polar_index(sq, 8, Point2{0.5, 0.5});
  EXPECT_EQ(idx.slab_count(), 8u);
  std::size_t doubles = 0;
  for (std::size_t s = 0; s < 8; ++s) {
    const auto edges = idx.slab_edges(s);
    ASSERT_GE(edges.size(), 1u);
    ASSERT_LE(edges.size(), 2u);
    doubles += edges.size() == 2;
  }
  EXPECT_EQ(doubles, 4u);
  EXPECT_EQ(idx.max_occupancy(), 2u);
}

TEST(PolarIndex, UnitSquareQueries) {
  const auto idx = build_polar_index(fixtures::unit_square());
  EXPECT_EQ(centroid(fixtures::unit_square()), idx.reference());
  EXPECT_EQ(idx.locate({0.5, 0.5}), Containment::Inside);
  QueryStats stats;
  EXPECT_EQ(idx.locate({0.999, 0.5}, &stats), Containment::Inside);
  EXPECT_LE(stats.evaluations, 2u);
  EXPECT_EQ(idx.locate({1.0, 0.5}), Containment::OnBoundary);
  EXPECT_EQ(idx.locate({0.0, 0.0}), Containment::OnBoundary);
  EXPECT_EQ(idx.locate({1.004, 0.5}), Containment::Outside);
  stats = {};
  EXPECT_EQ(idx.locate({5, 5}, &stats), Containment::Outside);
  EXPECT_EQ(stats.evaluations, 0u);
}

TEST(PolarIndex, BoxIsTheInflatedPolygonBox) {
  const auto idx = build_polar_index(fixtures::unit_square());
  EXPECT_NEAR(idx.box().min.x, -0.005, 1e-15);
  EXPECT_NEAR(idx.box().max.y, 1.005, 1e-15);
  EXPECT_NEAR(idx.perimeter(), 4 * 1.01, 1e-14);
}

TEST(PolarIndex, SlabsAreNonEmptyAndCoverEveryEdge) {
  for (const GenSpec2& spec : default_polygon_corpus()) {
    const ConvexPolygon poly = gen_convex_polygon(spec);
    const auto idx = build_polar_index(poly);
    std::vector<bool> seen(poly.size(), false);
    for (std::size_t s = 0; s < idx.slab_count(); ++s) {
      const auto edges = idx.slab_edges(s);
      ASSERT_FALSE(edges.empty());
      for (auto e : edges) seen[e] = true;
    }
    ASSERT_EQ(std::count(seen.begin(), seen.end(), true), static_cast<long>(poly.size()));
  }
}

TEST(PolarIndex, ExitEdgeOfEveryDirectionIsACandidate) {
  const auto dirs = fixtures::circle_directions(4096, 17);
  for (const GenSpec2& spec : default_polygon_corpus()) {
    const ConvexPolygon poly = gen_convex_polygon(spec);
    const auto idx = build_polar_index(poly);
    const Point2 ref = idx.reference();
    for (const Point2& d : dirs) {
      const auto exits = oracle::exit_edges(poly.vertices(), ref, d);
      ASSERT_FALSE(exits.empty());
      const auto list = idx.slab_edges(idx.slab_of({ref.x + d.x, ref.y + d.y}));
      // At a vertex either adjacent edge is a valid exit; one must be listed.
      ASSERT_TRUE(std::any_of(exits.begin(), exits.end(),
                              [&](std::size_t e) { return contains(list, e); }))
          << "n=" << poly.size() << " seed=" << spec.seed;
    }
  }
}

TEST(PolarIndex, DefaultOccupancyOnEllipsesIsAtMostTwo) {
  for (const GenSpec2& spec : default_polygon_corpus()) {
    const auto idx = build_polar_index(gen_convex_polygon(spec));
    EXPECT_LE(idx.max_occupancy(), 2u) << "n=" << spec.n << " seed=" << spec.seed;
    EXPECT_FALSE(idx.cap_exceeded());
  }
  EXPECT_LE(build_polar_index(fixtures::regular_polygon(1024)).max_occupancy(), 2u);
}

TEST(PolarIndex, DefaultSlabCountIsAtLeastFourPerEdge) {
  const auto poly = fixtures::regular_polygon(100);
  const auto idx = build_polar_index(poly);
  EXPECT_GE(idx.slab_count(), 400u);
  EXPECT_LE(idx.slab_count(), PolarIndex2::kMaxSlabs);
}

TEST(PolarIndex, DoublingTheSlabCountNeverRaisesOccupancy) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ConvexPolygon poly = gen_convex_polygon({50 + 20 * seed, seed, 1, 0.3, 0.2 * seed, false});
    for (std::size_t n = poly.size(); n <= 64 * poly.size(); n *= 2) {
      const auto coarse = build_polar_index(poly, n);
      const auto fine = build_polar_index(poly, 2 * n);
      ASSERT_LE(fine.max_occupancy(), coarse.max_occupancy());
      ASSERT_LE(fine.mean_occupancy(), coarse.mean_occupancy());
    }
  }
}

TEST(PolarIndex, FewSlabsStillClassifyExactly) {
  const ConvexPolygon poly = gen_convex_polygon({300, 12, 1, 0.5, 0.4, false});
  for (std::size_t n : {1u, 2u, 3u, 17u}) {
    const auto idx = build_polar_index(poly, n);
    for (const Point2& p : gen_query_points(poly.aabb(), {2000, n, 1.5})) {
      if (std::abs(min_signed_distance(poly, p)) > 2 * poly.tolerances().eps_q) {
        ASSERT_EQ(idx.locate(p), locate_linear_2d(poly, p));
      }
    }
  }
}

TEST(PolarIndex, EvaluationsStayWithinOccupancy) {
  for (std::size_t n : {8u, 64u, 512u, 4096u, 65536u}) {
    const ConvexPolygon poly = gen_convex_polygon({n, n, 1, 0.6, 0.3, false});
    const auto idx = build_polar_index(poly);
    std::size_t worst = 0;
    for (const Point2& p : gen_query_points(poly.aabb(), {5000, 3, 1.5})) {
      QueryStats stats;
      idx.locate(p, &stats);
      worst = std::max<std::size_t>(worst, stats.evaluations);
    }
    EXPECT_LE(worst, idx.max_occupancy() + 2) << "n=" << n;
    EXPECT_LE(worst, 2u) << "n=" << n;
  }
}

TEST(PolarIndex, AgreesWithTheCrossingNumberOracle) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = std::size_t{8} << (2 * (seed % 4));
    const ConvexPolygon poly = gen_convex_polygon({n, seed, 1, 0.35, 0.1 * seed, false});
    const auto idx = build_polar_index(poly);
    const double band = 2 * poly.tolerances().eps_q;
    for (const Point2& p : gen_query_points(poly.aabb(), {1000, seed + 5, 1.5})) {
      const auto expected = oracle::classify_2d(poly.vertices(), p, band);
      if (expected) ASSERT_EQ(idx.locate(p), *expected);
    }
  }
}

TEST(PolarIndex, CustomReferencePoint) {
  const auto sq = fixtures::unit_square();
  const auto idx = build_polar_index(sq, std::nullopt, Point2{0.9, 0.1});
  EXPECT_EQ(idx.reference(), (Point2{0.9, 0.1}));
  EXPECT_EQ(idx.locate({0.2, 0.8}), Containment::Inside);
  EXPECT_EQ(idx.locate({-0.001, 0.8}), Containment::Outside);
  EXPECT_THROW(build_polar_index(sq, std::nullopt, Point2{1.0, 0.5}), GeometryError);
  EXPECT_THROW(build_polar_index(sq, 0), GeometryError);
}

TEST(PolarIndex, CorruptedSlabIsCaughtByTheHarness) {
  const ConvexPolygon poly = gen_convex_polygon({64, 2, 1, 0.7, 0.0, false});
  auto idx = build_polar_index(poly);
  const Point2 ref = idx.reference();
  // Swap out the exit edge of the +x direction.
  const Point2 dir{1, 0};
  const auto exits = oracle::exit_edges(poly.vertices(), ref, dir, 0);
  ASSERT_EQ(exits.size(), 1u);
  const std::size_t slab = idx.slab_of({ref.x + 1, ref.y});
  PolarIndexTestPeer::replace_with_opposite(idx, slab, static_cast<std::uint32_t>(exits[0]));
  ASSERT_FALSE(contains(idx.slab_edges(slab), exits[0]));

  const std::vector<NamedLocator2> methods{
      {"linear", [&](Point2 p) { return locate_linear_2d(poly, p); }},
      {"polar-corrupt", [&](Point2 p) { return idx.locate(p); }}};
  // Points just beyond the exit edge along the damaged slab's directions.
  std::vector<Point2> points;
  const auto hits = oracle::ray_hits(poly.vertices(), ref, dir);
  for (double f : {1.001, 1.002, 1.004}) points.push_back({ref.x + hits[0].t * f, ref.y});
  const auto report = compare_methods(poly, points, methods);
  EXPECT_GE(report.mismatches.size(), 1u);
}
