#include <gtest/gtest.h>

#include <stdexcept>

#include "findep/word.hpp"

using namespace findep;

TEST(Word, Properness) {
  EXPECT_TRUE(is_proper(Word(3, {1, 2, 1})));
  EXPECT_FALSE(is_proper(Word(3, {1, 1, 2})));
  EXPECT_TRUE(is_proper(Word(3, std::vector<Color>{})));
}

TEST(Word, Remove) {
  const Word x(3, {1, 2, 1});
  EXPECT_EQ(remove(x, 2), Word(3, {1, 1}));
  EXPECT_EQ(remove(x, 1), Word(3, {2, 1}));
  EXPECT_EQ(remove(Word(5, {5}), 1), Word(5, std::vector<Color>{}));
  EXPECT_THROW(remove(x, 0), std::out_of_range);
  EXPECT_THROW(remove(x, 4), std::out_of_range);
}

TEST(Word, ParseAndPrint) {
  const Word x = parse_word("1,2,1", 4);
  EXPECT_EQ(x.size(), 3u);
  EXPECT_EQ(x.at(2), 2);
  EXPECT_EQ(x.str(), "1,2,1");
  EXPECT_THROW(parse_word("1,x", 4), std::invalid_argument);
  EXPECT_THROW(parse_word("1,5", 4), std::invalid_argument);
  EXPECT_THROW(parse_word("0", 4), std::invalid_argument);
}

TEST(Word, Enumeration) {
  std::size_t all = 0, proper = 0;
  for_each_word(3, 4, [&](const Word&) { ++all; });
  for_each_proper_word(3, 4, [&](const Word& x) {
    EXPECT_TRUE(is_proper(x));
    ++proper;
  });
  EXPECT_EQ(all, 81u);
  EXPECT_EQ(proper, 3u * 2 * 2 * 2);
}

TEST(SignWord, Runs) {
  const auto y = parse_sign_word("+++--+-++---+-+");
  const std::vector<std::size_t> expected{3, 2, 1, 1, 2, 3, 1, 1, 1};
  EXPECT_EQ(runs(y), expected);
  EXPECT_EQ(runs(parse_sign_word("++")), std::vector<std::size_t>{2});
  EXPECT_TRUE(runs(SignWord{}).empty());
  EXPECT_EQ(from_runs(expected), y);
}

TEST(SignWord, ZeroRunsCoalesce) {
  const std::vector<std::size_t> lengths{2, 0, 1};
  EXPECT_EQ(from_runs(lengths).str(), "+++");
}

TEST(SignWord, RowsRoundTrip) {
  EXPECT_EQ(to_rows(Word(4, {1, 2, 3, 4})).y.str(), "--++");
  EXPECT_EQ(to_rows(Word(4, {1, 2, 3, 4})).z.str(), "-+-+");
  for_each_word(4, 4, [](const Word& x) {
    const auto r = to_rows(x);
    EXPECT_EQ(from_rows(r.y, r.z), x);
  });
}
