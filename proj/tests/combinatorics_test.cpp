#include <gtest/gtest.h>

#include <set>

#include "findep/combinatorics.hpp"
#include "findep/sampler.hpp"
#include "oracles.hpp"

using namespace findep;

TEST(Alpha, Values) {
  EXPECT_EQ(alpha(parse_sign_word("+-++")), 9);
  EXPECT_EQ(alpha(parse_sign_word("++++++")), 1);
  EXPECT_EQ(alpha(parse_sign_word("+-")), 2);
  EXPECT_EQ(alpha(SignWord{}), 1);
}

TEST(Alpha, MatchesPermutationEnumeration) {
  for (std::size_t n = 0; n <= 7; ++n) {
    for_each_sign_word(n, [](const SignWord& y) { ASSERT_EQ(alpha(y), oracle::descent_class(y)) << y.str(); });
  }
}

TEST(Alpha, SumsToFactorial) {
  for (unsigned n = 0; n <= 10; ++n) {
    BigInt sum = 0;
    for_each_sign_word(n, [&](const SignWord& y) { sum += alpha(y); });
    EXPECT_EQ(sum, factorial(n + 1));
  }
}

TEST(Alpha, Runs) {
  const std::vector<std::size_t> zigzag{1, 1, 1, 1};
  EXPECT_EQ(alpha_runs(zigzag), oracle::descent_class(parse_sign_word("+-+-")));
  const std::vector<std::size_t> mixed{2, 3, 1};
  EXPECT_EQ(alpha_runs(mixed), alpha(parse_sign_word("++---+")));
  const std::vector<std::size_t> single{5};
  EXPECT_EQ(alpha_runs(single), 1);
  const std::vector<std::size_t> merged{2, 0, 1};
  EXPECT_EQ(alpha_runs(merged), 1);
}

TEST(DyckWords, Membership) {
  EXPECT_NO_THROW(DispersedDyckWord::parse("+-0++--00"));
  EXPECT_NO_THROW(DispersedDyckWord::parse("000"));
  EXPECT_NO_THROW(DispersedDyckWord::parse("+-+-"));
  EXPECT_THROW(DispersedDyckWord::parse("+0-"), std::invalid_argument);
  EXPECT_THROW(DispersedDyckWord::parse("-+"), std::invalid_argument);
  EXPECT_EQ(DispersedDyckWord::parse("+-0++--00").weight(), 3u);
}

TEST(DyckWords, SmallSets) {
  EXPECT_EQ(enumerate_dd(0).size(), 1u);
  std::set<std::string> three;
  for (const auto& w : enumerate_dd(3)) three.insert(w.str());
  EXPECT_EQ(three, (std::set<std::string>{"000", "+-0", "0+-"}));
}

TEST(DyckWords, CountAndValidity) {
  for (unsigned m = 0; m <= 12; ++m) {
    const auto all = enumerate_dd(m);
    EXPECT_EQ(BigInt(static_cast<unsigned long>(all.size())), binomial(m, m / 2)) << m;
    // Every member is a concatenation of balanced blocks and 0's; brute-force count of such words agrees.
    std::size_t brute = 0;
    std::vector<std::int8_t> letters(m);
    std::uint64_t total = 1;
    for (unsigned i = 0; i < m; ++i) total *= 3;
    for (std::uint64_t code = 0; code < total && m <= 10; ++code) {
      std::uint64_t c = code;
      for (unsigned i = 0; i < m; ++i, c /= 3) letters[i] = static_cast<std::int8_t>(static_cast<int>(c % 3) - 1);
      long h = 0;
      bool ok = true;
      for (auto l : letters) {
        if (l == 0 && h != 0) ok = false;
        h += l;
        if (h < 0) ok = false;
      }
      if (ok && h == 0) ++brute;
    }
    if (m <= 10) EXPECT_EQ(brute, all.size()) << m;
  }
}

TEST(TransformYW, PublishedExample) {
  const auto y = parse_sign_word("+++--+-++---+-+");
  const auto w = DispersedDyckWord::parse("++--0+-0");
  EXPECT_EQ(transform_y_w(y, w).str(), "+++++++++-----+");
  EXPECT_EQ(transform_y_w(y, w), transform_y_w(y, DispersedDyckWord::parse("+-+-0+-0")));
  EXPECT_EQ(transform_y_w(y, DispersedDyckWord::parse("00000000")), y);
}

TEST(SignFactor, ByDefinition) {
  const auto y = parse_sign_word("+-+");
  const auto z = parse_sign_word("-++");
  EXPECT_EQ(sign_factor(DispersedDyckWord::parse("00"), y, z), 1);
  EXPECT_EQ(sign_factor(DispersedDyckWord::parse("+-"), y, z), z[0] * z[2]);
  const auto y2 = parse_sign_word("++-");
  EXPECT_EQ(sign_factor(DispersedDyckWord::parse("0"), y2, z), 1);
}

TEST(QFormula, Basics) {
  EXPECT_EQ(q_formula(Word(4, {1})), 1);
  EXPECT_EQ(q_formula(Word(4, {1, 1, 2})), 0);
  EXPECT_EQ(q_fast(Word(4, {1})), 1);
  EXPECT_EQ(q_fast(Word(4, {1, 1, 2})), 0);
}

TEST(QFormula, EqualsBuildings) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for_each_proper_word(4, n, [](const Word& x) {
      const auto b = count_buildings(x);
      ASSERT_EQ(q_formula(x), b) << x.str();
      ASSERT_EQ(q_fast(x), b) << x.str();
    });
  }
}

TEST(QFormula, RandomLongWords) {
  SeededRng rng(99);
  for (int i = 0; i < 40; ++i) {
    const Word x = sample_insertion(4, 12, rng);
    EXPECT_EQ(q_fast(x), count_buildings(x)) << x.str();
  }
}

TEST(QFormula, LongWordStaysPolynomial) {
  SeededRng rng(1);
  const Word x = sample_insertion(4, 200, rng);
  EXPECT_GT(q_fast(x), 0);
}

TEST(QFormula, IidWeightGoesNegative) {
  const Word x = from_rows(parse_sign_word("+-+-"), parse_sign_word("++++"));
  const auto value = q_formula_with(x, iid_alpha);
  EXPECT_LT(value, 0);
  EXPECT_EQ(value, make_rational(-15, 2));
  EXPECT_EQ(q_formula_with(x, [](const SignWord& y) { return BigRational(alpha(y)); }), count_buildings(x));
}

TEST(Marginals, SmallN) {
  for (std::size_t n = 1; n <= 5; ++n) {
    EXPECT_TRUE(check_row_marginal(n).passed()) << n;
    EXPECT_TRUE(check_building_marginal(n).passed()) << n;
  }
  // y = +-: the four words 3|4 then 1|2 each have two buildings.
  BigInt sum = 0;
  for (int a : {3, 4}) {
    for (int b : {1, 2}) sum += q_fast(Word(4, {a, b}));
  }
  EXPECT_EQ(sum, 4 * alpha(parse_sign_word("+-")));
}

TEST(Marginals, Catalan) {
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto s = catalan_identity(n);
    EXPECT_EQ(s.lhs, s.rhs) << n;
    EXPECT_EQ(s.rhs, pow_rational(2, static_cast<unsigned>(n - 1)));
  }
}

TEST(Marginals, Curious) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto s = curious_identity(n);
    EXPECT_EQ(s.lhs, s.rhs) << n;
  }
}

TEST(Peaks, Values) {
  EXPECT_EQ(peak_prob(0), 1);
  EXPECT_EQ(peak_prob(1), make_rational(1, 3));
  EXPECT_EQ(peak_prob(2), make_rational(2, 15));
  for (std::size_t m = 0; m <= 4; ++m) EXPECT_EQ(peak_prob(m), oracle::alternating_prob(m)) << m;
}
