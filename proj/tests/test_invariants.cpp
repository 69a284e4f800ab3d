#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "polyadj/enumeration.hpp"
#include "polyadj/invariants.hpp"

using namespace polyadj;

namespace {

InvariantRecord record(long a2, long i, long b, long n, long v, long d, long s) {
  return {a2, i, b, n, v, d, s};
}

}  // namespace

TEST(Invariants, Examples) {
  EXPECT_EQ(invariants(hull({{0, 0}, {1, 0}, {0, 1}})), record(1, 0, 3, 3, 3, 1, 0));
  EXPECT_EQ(invariants(hull({{0, 0}, {3, 0}, {0, 3}})), record(9, 1, 9, 10, 3, 9, 1));
  EXPECT_EQ(invariants(hull({{0, 0}, {3, 0}, {3, 3}, {0, 3}})), record(18, 4, 12, 16, 4, 18, 4));
  EXPECT_EQ(invariants(LatticePolytope()), record(0, 0, 0, 0, 0, 0, 0));
}

TEST(Invariants, LowerDimensionalConventions) {
  const auto seg = hull({{1, 1}, {7, 5}});  // lattice length 2
  const auto r = invariants(seg);
  EXPECT_EQ(r.a2, 0);
  EXPECT_EQ(r.i, 0);
  EXPECT_EQ(r.b, 3);
  EXPECT_EQ(r.n, 3);
  EXPECT_EQ(r.v, 2);
  const auto pt = invariants(hull({{2, -9}}));
  EXPECT_EQ(pt.b, 1);
  EXPECT_EQ(pt.n, 1);
  EXPECT_EQ(pt.v, 1);
  EXPECT_EQ(pt.i, 0);
  EXPECT_EQ(pt.a2, 0);
}

TEST(Invariants, ScanMatchesBruteForceAndPick) {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 400; ++k) {
    const auto p = random_polygon(rng(), 3 + k % 25);
    const auto r = invariants(p);
    const auto c = oracle::point_counts(p);
    ASSERT_EQ(r.i, c.interior) << compact_string(p);
    EXPECT_EQ(r.b, c.boundary);
    EXPECT_EQ(r.n, c.total);
    EXPECT_EQ(interior_point_count(p), c.interior);
    EXPECT_EQ(lattice_point_count(p), c.total);
    EXPECT_EQ(boundary_point_count(p), c.boundary);
    // Pick and the dictionary, recomputed here.
    EXPECT_EQ(r.a2, 2 * r.i + r.b - 2);
    EXPECT_EQ(r.d, r.n + r.s - 2);
    EXPECT_EQ(r.n, r.i + r.b);
    EXPECT_EQ(r.v, Integer(p.num_vertices()));
    EXPECT_GE(r.a2, 0);
  }
}

TEST(Invariants, UnimodularInvariance) {
  std::mt19937_64 rng(43);
  for (const auto& p : enumerate_box(3)) {
    const auto r = invariants(p);
    for (int k = 0; k < 5; ++k) EXPECT_EQ(invariants(apply(oracle::random_map(rng), p)), r);
  }
}

TEST(Invariants, LargePolygonsUseExactRowsAndPick) {
  // Far outside the kernel range; counts must still be exact.
  const Integer big = parse_integer("1000000000000");
  const auto tri = hull({LatticePoint(0, 0), LatticePoint(big, Integer(0)), LatticePoint(Integer(0), big)});
  const auto r = invariants(tri);
  EXPECT_EQ(r.a2, big * big);
  EXPECT_EQ(r.b, 3 * big);
  EXPECT_EQ(r.i, (big - 1) * (big - 2) / 2);
  // Wide but short: exact per-row arithmetic.
  const auto strip = hull({LatticePoint(0, 0), LatticePoint(big, Integer(0)), LatticePoint(big, Integer(3)),
                           LatticePoint(Integer(0), Integer(3))});
  EXPECT_EQ(interior_point_count(strip), (big - 1) * 2);
  EXPECT_EQ(lattice_point_count(strip), (big + 1) * 4);
}

TEST(Invariants, InteriorRowExtremesSpanInteriorHull) {
  std::mt19937_64 rng(47);
  for (int k = 0; k < 200; ++k) {
    const auto p = random_polygon(rng(), 12);
    const auto interior = oracle::interior_points(p);
    EXPECT_EQ(hull(interior_row_extremes(p)), hull(interior));
  }
}
