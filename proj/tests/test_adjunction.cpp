#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "polyadj/adjunction.hpp"
#include "polyadj/enumeration.hpp"
#include "polyadj/fan.hpp"

using namespace polyadj;

namespace {

const LatticePolytope kTriangle = hull({{0, 0}, {1, 0}, {0, 1}});
const LatticePolytope kSquare1 = hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
const LatticePolytope kThreeDelta = hull({{0, 0}, {3, 0}, {0, 3}});
const LatticePolytope kSquare3 = hull({{0, 0}, {3, 0}, {3, 3}, {0, 3}});
const LatticePolytope kRect42 = hull({{0, 0}, {4, 0}, {4, 2}, {0, 2}});

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

// Level recomputed with the enumeration oracle over the resolved fan.
Rational oracle_level(const LatticePolytope& p) {
  const Fan fan = resolve(normal_fan(p));
  std::vector<Integer> h;
  for (const auto& u : fan.rays) {
    Integer best = dot(u, p.vertices()[0]);
    for (const auto& v : p.vertices()) best = std::min(best, dot(u, v));
    h.push_back(best);
  }
  return oracle::max_inset(fan.rays, h);
}

}  // namespace

TEST(InteriorHull, Examples) {
  EXPECT_EQ(interior_hull(kSquare3), hull({{1, 1}, {2, 1}, {2, 2}, {1, 2}}));
  EXPECT_EQ(interior_hull(kThreeDelta), hull({{1, 1}}));
  EXPECT_TRUE(interior_hull(kSquare1).empty());
  EXPECT_EQ(interior_hull(kRect42), hull({{1, 1}, {3, 1}}));
  EXPECT_TRUE(interior_hull(hull({{0, 0}, {5, 0}})).empty());
}

TEST(InteriorHull, LatticePointsAreInteriorPoints) {
  std::mt19937_64 rng(81);
  for (int k = 0; k < 200; ++k) {
    const auto p = random_polygon(rng(), 10);
    const auto inner = oracle::interior_points(p);
    const auto h = interior_hull(p);
    EXPECT_EQ(h, hull(inner));
    EXPECT_EQ(oracle::point_counts(h).total, Integer(inner.size()));
  }
}

TEST(Level, Examples) {
  EXPECT_EQ(level(kTriangle), q(1, 3));
  EXPECT_EQ(level(kSquare3), q(3, 2));
  EXPECT_EQ(level(kThreeDelta), q(1));
  EXPECT_EQ(level(kRect42), q(1));
  EXPECT_EQ(level(kSquare1), q(1, 2));
  EXPECT_EQ(level(hull({{0, 0}, {3, 1}})), q(0));
  EXPECT_EQ(level(hull({{2, 2}})), q(0));
  EXPECT_THROW(level(LatticePolytope()), std::invalid_argument);
}

TEST(Level, ResolvedRaysCutDeeperThanFacets) {
  // Cone with facet normals (1,0), (-1,5): the inserted ray (0,1) binds.
  const auto p = hull({{0, 0}, {5, 1}, {0, 1}});
  EXPECT_FALSE(is_smooth(normal_fan(p)));
  EXPECT_LE(level(p), facet_level(p));
  bool strictly_below = false;
  for (const auto& r : enumerate_box(3)) strictly_below = strictly_below || level(r) < facet_level(r);
  EXPECT_TRUE(strictly_below);
}

TEST(Level, MatchesEnumerationOracle) {
  std::mt19937_64 rng(83);
  for (int k = 0; k < 150; ++k) {
    const auto p = random_polygon(rng(), 8);
    const auto l = level(p);
    EXPECT_EQ(l, oracle_level(p)) << compact_string(p);
    EXPECT_GT(l, 0);
    if (is_smooth(normal_fan(p))) {
      EXPECT_EQ(l, facet_level(p));
    }
  }
}

TEST(Level, ScalesLinearlyAndIsInvariant) {
  std::mt19937_64 rng(89);
  for (int k = 0; k < 60; ++k) {
    const auto p = random_polygon(rng(), 5);
    const auto l = level(p);
    for (int s = 2; s <= 3; ++s) EXPECT_EQ(level(dilate(p, s)), l * Rational(s));
    EXPECT_EQ(level(apply(oracle::random_map(rng), p)), l);
  }
}

TEST(Chain, Examples) {
  const auto a = chain(kSquare3);
  EXPECT_EQ(a.polytopes, (std::vector<LatticePolytope>{kSquare3, hull({{1, 1}, {2, 1}, {2, 2}, {1, 2}})}));
  EXPECT_EQ(a.steps, 1);
  EXPECT_EQ(a.level, q(3, 2));
  EXPECT_EQ(a.endgame, (EndgameCase{Endgame::fractional_big, 0}));

  const auto b = chain(kThreeDelta);
  EXPECT_EQ(b.polytopes.back(), hull({{1, 1}}));
  EXPECT_EQ(b.steps, 1);
  EXPECT_EQ(b.level, q(1));
  EXPECT_EQ(b.endgame.tag, Endgame::point);

  const auto c = chain(kRect42);
  EXPECT_EQ(c.steps, 1);
  EXPECT_EQ(c.level, q(1));
  EXPECT_EQ(c.endgame, (EndgameCase{Endgame::pencil, 2}));

  const auto d = chain(kSquare1);
  EXPECT_EQ(d.polytopes.size(), 1u);
  EXPECT_EQ(d.steps, 0);
  EXPECT_EQ(d.level, q(1, 2));
  EXPECT_EQ(d.endgame.tag, Endgame::fractional_big);

  const auto e = chain(kTriangle);
  EXPECT_EQ(e.endgame.tag, Endgame::fractional_big);
  EXPECT_TRUE((e.level * Rational(3)).is_integer());

  EXPECT_THROW(chain(hull({{0, 0}, {1, 0}})), std::invalid_argument);
  EXPECT_EQ(to_string(Endgame::pencil), "PENCIL");
}

TEST(Chain, PropertiesOnBox4) {
  for (const auto& p : enumerate_box(4)) {
    const auto c = chain(p);
    EXPECT_TRUE(c.steps_match_level()) << compact_string(p);
    EXPECT_TRUE(c.level.den() == 1 || c.level.den() == 2 || c.level.den() == 3);
    for (std::size_t k = 0; k + 1 < c.polytopes.size(); ++k) {
      EXPECT_EQ(c.polytopes[k + 1], interior_hull(c.polytopes[k]));
      EXPECT_EQ(c.records[k].i, c.records[k + 1].n);
      if (c.polytopes[k + 1].dim() == 2) {
        EXPECT_EQ(c.stage_levels[k + 1], c.stage_levels[k] - Rational(1));
      }
    }
    EXPECT_EQ(c.records.back().i, 0);
  }
}

TEST(ClassifyEndgame, RejectsInconsistentChains) {
  auto c = chain(kSquare3);
  c.level = q(2);  // integral level ending in a polygon
  EXPECT_THROW(classify_endgame(c), ClassificationError);
  c.level = q(7, 5);
  EXPECT_THROW(classify_endgame(c), ClassificationError);
  auto d = chain(kThreeDelta);
  d.level = q(1, 2);
  EXPECT_THROW(classify_endgame(d), ClassificationError);
  auto e = chain(kRect42);
  e.level = q(3, 2);
  EXPECT_THROW(classify_endgame(e), ClassificationError);
  AdjunctionChain empty;
  EXPECT_THROW(classify_endgame(empty), ClassificationError);
}
