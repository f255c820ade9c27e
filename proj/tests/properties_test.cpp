// Randomized invariants over seeded inputs.

#include <gtest/gtest.h>

#include "findep/buildings.hpp"
#include "findep/combinatorics.hpp"
#include "findep/measure.hpp"
#include "findep/sampler.hpp"
#include "oracles.hpp"

using namespace findep;

namespace {

Word random_word(int q, std::size_t n, SeededRng& rng) {
  std::vector<Color> s(n);
  for (auto& c : s) c = static_cast<Color>(1 + rng.below(static_cast<std::uint64_t>(q)));
  return Word(q, s);
}

BinaryPattern random_pattern(std::size_t n, SeededRng& rng) {
  std::string text;
  for (std::size_t i = 0; i < n; ++i) text += "01*"[rng.below(3)];
  return BinaryPattern::parse(text);
}

}  // namespace

TEST(Properties, PositiveExactlyOnProperWords) {
  SeededRng rng(101);
  for (int i = 0; i < 500; ++i) {
    const Word x = random_word(4, 1 + rng.below(9), rng);
    EXPECT_EQ(count_buildings(x) > 0, is_proper(x)) << x.str();
  }
}

TEST(Properties, DeletionRecursion) {
  SeededRng rng(102);
  for (int i = 0; i < 200; ++i) {
    const Word x = sample_insertion(3 + static_cast<int>(rng.below(3)), 2 + rng.below(7), rng);
    BigInt sum = 0;
    for (std::size_t j = 1; j <= x.size(); ++j) sum += oracle::buildings(remove(x, j));
    EXPECT_EQ(sum, count_buildings(x)) << x.str();
  }
}

TEST(Properties, ReversalAndRelabeling) {
  SeededRng rng(103);
  std::vector<int> perm{1, 2, 3, 4, 5};
  for (int i = 0; i < 200; ++i) {
    const Word x = sample_insertion(5, 1 + rng.below(14), rng);
    for (std::size_t k = 4; k > 0; --k) std::swap(perm[k], perm[rng.below(k + 1)]);
    const auto b = count_buildings(x);
    EXPECT_EQ(count_buildings(x.reversed()), b);
    EXPECT_EQ(count_buildings(x.relabeled(perm)), b);
  }
}

TEST(Properties, RowSwapSymmetry) {
  SeededRng rng(104);
  for (int i = 0; i < 200; ++i) {
    const Word x = sample_insertion(4, 1 + rng.below(20), rng);
    const auto rows = to_rows(x);
    EXPECT_EQ(q_fast(from_rows(rows.z, rows.y)), q_fast(x)) << x.str();
  }
}

TEST(Properties, FastRecurrenceMatchesBuildings) {
  SeededRng rng(105);
  for (int i = 0; i < 200; ++i) {
    const Word x = random_word(4, 1 + rng.below(12), rng);
    EXPECT_EQ(q_fast(x), count_buildings(x)) << x.str();
  }
}

TEST(Properties, ColorOneIndicatorIsOneDependent) {
  SeededRng rng(106);
  for (int i = 0; i < 200; ++i) {
    const auto u = random_pattern(1 + rng.below(4), rng);
    const auto v = random_pattern(1 + rng.below(4), rng);
    const auto joint = single_color_prob(4, u + BinaryPattern::parse("*") + v);
    EXPECT_EQ(joint, single_color_prob(4, u) * single_color_prob(4, v)) << u.str() << " " << v.str();
  }
}

TEST(Properties, ThreeColoringIsTwoDependent) {
  SeededRng rng(107);
  for (int i = 0; i < 100; ++i) {
    const Word u = sample_insertion(3, 1 + rng.below(3), rng);
    const Word v = sample_insertion(3, 1 + rng.below(3), rng);
    BigRational joint = 0;
    for_each_word(3, 2, [&](const Word& mid) { joint += cylinder_prob(3, u + mid + v); });
    EXPECT_EQ(joint, cylinder_prob(3, u) * cylinder_prob(3, v)) << u.str() << " " << v.str();
  }
}

TEST(Properties, AlphaRunsAgree) {
  SeededRng rng(108);
  for (int i = 0; i < 200; ++i) {
    std::vector<std::size_t> lengths(1 + rng.below(5));
    for (auto& l : lengths) l = 1 + rng.below(3);
    const auto y = from_runs(lengths, rng.bernoulli(1, 2) ? +1 : -1);
    EXPECT_EQ(alpha_runs(lengths), alpha(from_runs(lengths)));
    EXPECT_EQ(runs(y), lengths);
  }
}
