#include <gtest/gtest.h>

#include "findep/lattice.hpp"

using namespace findep;

TEST(Directions, Counts) {
  EXPECT_EQ(directions(2, 1), (std::vector<Vec>{{1, 0}, {0, 1}}));
  EXPECT_EQ(directions(1, 1), (std::vector<Vec>{{1}}));
  EXPECT_EQ(directions(2, 2).size(), 6u);
  EXPECT_EQ(directions(3, 1).size(), 3u);
  // 6 vectors of norm 1 and 18 of norm 2 in Z^3, halved.
  EXPECT_EQ(directions(3, 2).size(), 12u);
}

TEST(Box, RangeOne) {
  const auto c = sample_box(2, 1, {10, 10}, 1);
  EXPECT_EQ(c.palette_size(), 16u);
  EXPECT_TRUE(verify_range(c, 1));
  const auto cube = sample_box(3, 1, {5, 5, 5}, 1);
  EXPECT_EQ(cube.palette_size(), 64u);
  EXPECT_TRUE(verify_range(cube, 1));
}

TEST(Box, RangeTwo) {
  const auto c = sample_box(2, 2, {7, 6}, 4);
  EXPECT_EQ(c.components(), 6u);
  EXPECT_TRUE(verify_range(c, 2));
}

TEST(Box, LineIsPlainColoring) {
  const auto c = sample_box(1, 1, {40}, 9);
  for (std::size_t v = 0; v + 1 < c.vertex_count(); ++v) EXPECT_NE(c.component(v, 0), c.component(v + 1, 0));
}

TEST(Box, Deterministic) {
  const auto a = sample_box(2, 1, {6, 6}, 5);
  const auto b = sample_box(2, 1, {6, 6}, 5);
  EXPECT_EQ(a.to_csv(), b.to_csv());
  EXPECT_NE(a.to_csv(), sample_box(2, 1, {6, 6}, 6).to_csv());
}

TEST(Box, VerifyRangeDetectsClash) {
  BoxColoring c({2}, {{1}});
  c.set_component(0, 0, 1);
  c.set_component(1, 0, 1);
  EXPECT_FALSE(verify_range(c, 1));
  BoxColoring single({1}, {{1}});
  single.set_component(0, 0, 1);
  EXPECT_TRUE(verify_range(single, 1));
}

TEST(Box, Indexing) {
  const BoxColoring c({3, 4}, directions(2, 1));
  EXPECT_EQ(c.index({1, 2}), 6u);
  EXPECT_EQ(c.coordinates(6), (Vec{1, 2}));
  EXPECT_EQ(c.index({3, 0}), BoxColoring::npos);
}
