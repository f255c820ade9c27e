#include <gtest/gtest.h>

#include "findep/hardcore.hpp"
#include "findep/measure.hpp"
#include "findep/sampler.hpp"
#include "oracles.hpp"

using namespace findep;

namespace {
BigRational r(std::int64_t a, std::int64_t b = 1) { return make_rational(a, b); }

std::vector<std::size_t> all_vertices(const FiniteGraph& g) { return g.all().members(); }
}  // namespace

TEST(Grid, Shape) {
  EXPECT_EQ(grid({3, 3}).size(), 9u);
  EXPECT_EQ(grid({3, 3}).edge_count(), 12u);
  EXPECT_EQ(grid({1}).size(), 1u);
  EXPECT_EQ(grid({1}).edge_count(), 0u);
  EXPECT_EQ(grid({2, 2}).edge_count(), 4u);
  EXPECT_EQ(grid({2, 3, 4}).edge_count(), 1u * 3 * 4 + 2 * 2 * 4 + 2 * 3 * 3);
  EXPECT_EQ(path_graph(5).edge_count(), 4u);
}

TEST(Grid, RowMajorOrder) {
  const auto g = grid({2, 3});
  EXPECT_EQ(g.coordinates()[1], (std::vector<int>{0, 1}));
  EXPECT_EQ(g.coordinates()[3], (std::vector<int>{1, 0}));
  EXPECT_TRUE(g.adjacent(0, 3));
  EXPECT_FALSE(g.adjacent(2, 3));
}

TEST(VertexSetTest, Basics) {
  VertexSet s(130);
  EXPECT_TRUE(s.empty());
  s.insert(3);
  s.insert(129);
  EXPECT_EQ(s.count(), 2u);
  EXPECT_EQ(s.max(), 129u);
  EXPECT_EQ(s.min(), 3u);
  s.erase(129);
  EXPECT_EQ(s.members(), std::vector<std::size_t>{3});
  EXPECT_EQ(VertexSet::full(70).count(), 70u);
}

TEST(IndependencePoly, SingleVertex) {
  const auto g = grid({1});
  EXPECT_EQ(independence_poly(g, g.all(), r(2, 7)), r(9, 7));
}

TEST(IndependencePoly, PathAtOneIsFibonacci) {
  BigInt a = 1, b = 2;
  for (std::size_t n = 1; n <= 30; ++n) {
    const auto g = path_graph(n);
    EXPECT_EQ(independence_poly(g, g.all(), 1), b) << n;
    const BigInt c = a + b;
    a = b;
    b = c;
  }
}

TEST(IndependencePoly, MatchesSubsetEnumeration) {
  for (const auto& dims : std::vector<std::vector<int>>{{4}, {2, 3}, {3, 3}, {4, 4}, {2, 2, 3}, {2, 2, 2}}) {
    const auto g = grid(dims);
    for (const auto& lambda : {r(-1, 5), r(1, 3), r(-3, 2), r(7)}) {
      EXPECT_EQ(independence_poly(g, g.all(), lambda), oracle::independence_poly(g, all_vertices(g), lambda));
    }
  }
}

TEST(IndependencePoly, SubsetsAndRuleInvariance) {
  const auto g = grid({3, 4});
  SeededRng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    VertexSet a(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (rng.bernoulli(1, 2)) a.insert(v);
    }
    const auto lambda = r(-1, 8);
    const auto largest = independence_poly(g, a, lambda, RemovalRule::LargestFirst);
    EXPECT_EQ(largest, independence_poly(g, a, lambda, RemovalRule::SmallestFirst));
    EXPECT_EQ(largest, oracle::independence_poly(g, a.members(), lambda));
  }
}

TEST(IndependencePoly, ThreeByThree) {
  const auto g = grid({3, 3});
  IndependencePolynomial z(g, r(-1, 5));
  EXPECT_EQ(z(g.all()), r(-21, 3125));
  EXPECT_EQ(z.memo_size(), 17u);
}

TEST(IndependencePoly, ForeignUniverse) {
  EXPECT_THROW(independence_poly(grid({3}), VertexSet(4), 1), std::invalid_argument);
}

TEST(IndependencePoly, PathNonnegativeAtQuarter) {
  for (std::size_t n = 1; n <= 20; ++n) {
    const auto g = path_graph(n);
    EXPECT_GE(independence_poly(g, g.all(), r(-1, 4)), 0) << n;
  }
}

TEST(Witness, PlanarBoxes) {
  for (std::size_t i = 0; i < 2; ++i) {
    const auto w = ph_witness(i);
    EXPECT_TRUE(w.negative());
    EXPECT_TRUE(w.matches()) << to_string(w.value) << " vs " << w.expected;
  }
}

TEST(Bridge, ColorOneAvoidance) {
  EXPECT_TRUE(coloring_hardcore_check(6));
  // A = {1, 3}: one minus the two singletons plus the pair, with Z on two isolated vertices.
  const auto g = path_graph(3);
  VertexSet a(3);
  a.insert(0);
  a.insert(2);
  EXPECT_EQ(independence_poly(g, a, r(-1, 4)), single_color_prob(4, BinaryPattern::parse("0*0")));
  EXPECT_EQ(single_color_prob(4, BinaryPattern::parse("00")), r(1, 2));
}

TEST(Tree, Marginal) {
  EXPECT_EQ(tree_marginal(2), r(1, 4));
  EXPECT_EQ(tree_marginal(3), r(4, 27));
  for (int d = 2; d <= 6; ++d) EXPECT_EQ(tree_marginal(d), tree_marginal_by_enumeration(d));
}

TEST(Tree, Shape) {
  EXPECT_EQ(tree_size(3, 0), 1u);
  EXPECT_EQ(tree_size(3, 2), 7u);
  EXPECT_EQ(tree_children(3, 2, 0), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(tree_children(3, 2, 2), (std::vector<std::size_t>{5, 6}));
  EXPECT_TRUE(tree_children(3, 2, 5).empty());
}

TEST(Tree, SamplesAreIndependentSets) {
  SeededRng rng(2);
  for (int d = 2; d <= 4; ++d) {
    const auto s = tree_hardcore(d, 6, rng);
    EXPECT_TRUE(tree_config_is_independent(s));
    EXPECT_EQ(s.interior, tree_size(d, 5));
  }
}

TEST(Bounds, Arithmetic) {
  const auto two = bounds_arithmetic(2);
  EXPECT_EQ(two.zd_upper, r(4, 27));
  EXPECT_EQ(two.colors_closed_form, 7);
  EXPECT_EQ(two.colors(), 9);
  EXPECT_EQ(bounds_arithmetic(3).colors(), 12);
  EXPECT_EQ(tree_color_bound(3), 7);
}
