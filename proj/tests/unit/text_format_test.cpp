#include <gtest/gtest.h>

#include <random>

#include "fpb/text_format.hpp"
#include "random_words.hpp"

using namespace fpb;

TEST(TextFormat, ParsesWords) {
  EXPECT_EQ(parse_word("1,2,1,2"), BasketWord::validate({1, 2, 1, 2}));
  EXPECT_EQ(parse_word(" (1, 1) "), BasketWord::validate({1, 1}));
  EXPECT_EQ(parse_word(""), BasketWord());
  EXPECT_EQ(parse_word("()"), BasketWord());
  EXPECT_THROW(parse_word("1,,1"), ParseError);
  EXPECT_THROW(parse_word("1,a"), ParseError);
  EXPECT_THROW(parse_word("1,1,2"), InvalidWord);
}

TEST(TextFormat, PrintedWordsReparse) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const auto w = testing_support::random_word(rng, 0, 12);
    EXPECT_EQ(parse_word(format_word(w)), w);
  }
}

TEST(TextFormat, Permutations) {
  const auto p = parse_permutations("1243:2341");
  EXPECT_EQ(p.sigma, (std::vector<int>{1, 2, 4, 3}));
  EXPECT_EQ(p.mu, (std::vector<int>{2, 3, 4, 1}));
  const auto q = parse_permutations("3,4,5,1,2,6 : 1,2,3,4,5,6");
  EXPECT_EQ(q.sigma, (std::vector<int>{3, 4, 5, 1, 2, 6}));
  EXPECT_EQ(format_permutations(p), "1243:2341");
  EXPECT_EQ(parse_permutations(format_permutations(q)), q);
  EXPECT_THROW(parse_permutations("1243"), ParseError);
  EXPECT_THROW(parse_permutations("1223:1234"), ParseError);
  EXPECT_THROW(parse_permutations("123:1234"), ParseError);
}
