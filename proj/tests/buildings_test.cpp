#include <gtest/gtest.h>

#include "findep/buildings.hpp"
#include "oracles.hpp"

using namespace findep;

TEST(Buildings, SmallValues) {
  EXPECT_EQ(count_buildings(Word(4, {1})), 1);
  EXPECT_EQ(count_buildings(Word(4, {1, 2, 1})), 4);
  EXPECT_EQ(count_buildings(Word(4, {1, 1})), 0);
  EXPECT_EQ(count_buildings(Word(4, {1, 2, 3})), 6);
  EXPECT_EQ(count_buildings(Word(4, std::vector<Color>{})), 1);
}

TEST(Buildings, LibraryOracleMatchesTestOracle) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for_each_word(3, n, [](const Word& x) { EXPECT_EQ(count_buildings_oracle(x), oracle::buildings(x)) << x.str(); });
  }
}

TEST(Buildings, RecursionMatchesOracle) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for_each_word(4, n, [](const Word& x) { ASSERT_EQ(count_buildings(x), oracle::buildings(x)) << x.str(); });
  }
}

TEST(Buildings, AlternatingLengthEight) {
  const Word x(2, {1, 2, 1, 2, 1, 2, 1, 2});
  EXPECT_EQ(count_buildings(x), oracle::buildings(x));
}

TEST(Buildings, OracleCap) {
  EXPECT_THROW(count_buildings_oracle(Word(4, {1, 2, 1, 2, 1, 2, 1, 2, 1})), std::invalid_argument);
}

TEST(Buildings, Totals) {
  EXPECT_EQ(total_buildings(4, 2), 24);
  EXPECT_EQ(total_buildings(3, 3), 60);
  EXPECT_EQ(total_buildings(2, 5), 32);
  for (int q = 2; q <= 5; ++q) {
    for (std::size_t n = 1; n <= 6; ++n) {
      BigInt sum = 0;
      for_each_word(q, n, [&](const Word& x) { sum += count_buildings(x); });
      EXPECT_EQ(sum, total_buildings(q, n)) << "q=" << q << " n=" << n;
    }
  }
}

TEST(Buildings, ClosedFormTotals) {
  // (n+1)! 2^n for q = 4, (n+2)!/2 for q = 3, 2^n for q = 2.
  for (unsigned n = 1; n <= 10; ++n) {
    EXPECT_EQ(total_buildings(4, n), factorial(n + 1) * pow_int(2, n));
    EXPECT_EQ(total_buildings(3, n), factorial(n + 2) / 2);
    EXPECT_EQ(total_buildings(2, n), pow_int(2, n));
  }
}

TEST(Buildings, Identities) {
  for (int q = 3; q <= 4; ++q) {
    const auto report = verify_identities(q, 4);
    ASSERT_FALSE(report.checks.empty());
    for (const auto& c : report.checks) EXPECT_TRUE(c.passed()) << c.name << ": " << c.first_failure;
  }
}

TEST(Buildings, TwoPointGap) {
  const auto g = two_point_gap(5, 1);
  EXPECT_EQ(g.lhs, 2);
  EXPECT_EQ(g.rhs, 2);
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(two_point_gap(4, n).lhs, 0);
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_GT(two_point_gap(5, n).lhs, 0);
}

TEST(Buildings, TwoPointGapByHand) {
  // sum over a of B(1 a 2) - B(1 a 1) at q = 5.
  BigInt lhs = 0;
  for (int a = 1; a <= 5; ++a) {
    lhs += count_buildings(Word(5, {1, a, 2})) - count_buildings(Word(5, {1, a, 1}));
  }
  EXPECT_EQ(lhs, 2);
}

TEST(Buildings, CounterMemo) {
  BuildingCounter counter;
  EXPECT_EQ(counter.count(Word(4, {1, 2, 1, 3})), oracle::buildings(Word(4, {1, 2, 1, 3})));
  EXPECT_GT(counter.memo_size(), 0u);
  counter.clear();
  EXPECT_EQ(counter.memo_size(), 0u);
}
