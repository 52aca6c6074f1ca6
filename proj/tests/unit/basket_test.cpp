#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fpb/basket.hpp"
#include "fpb/diagram.hpp"
#include "random_words.hpp"

using namespace fpb;

namespace {

BasketWord W(std::initializer_list<int> letters) { return BasketWord::validate(letters); }

std::optional<HandleSlide> slide_at(const BasketWord& w, int foot, int along, bool left_of_along) {
  for (const auto& s : find_slides(w, SlideFilter::All)) {
    if (s.foot == foot && s.along == along && s.left_of_along == left_of_along) return s;
  }
  return std::nullopt;
}

}  // namespace

TEST(BasketWord, AcceptsValidWords) {
  EXPECT_EQ(W({1, 2, 1, 2}).bands(), 2);
  EXPECT_EQ(W({1, 2, 3, 4, 5, 6, 4, 5, 1, 2, 3, 6}).bands(), 6);
  EXPECT_EQ(W({}).bands(), 0);
}

TEST(BasketWord, RejectsBadMultiplicity) {
  try {
    W({1, 1, 2});
    FAIL() << "odd length accepted";
  } catch (const InvalidWord& e) {
    EXPECT_EQ(e.letter(), 0);
  }
  try {
    W({1, 2, 2, 2});
    FAIL() << "triple letter accepted";
  } catch (const InvalidWord& e) {
    EXPECT_EQ(e.letter(), 2);
  }
  EXPECT_THROW(W({1, 3, 1, 3}), InvalidWord);
  EXPECT_THROW(W({0, 0}), InvalidWord);
}

TEST(BasketWord, FeetAreOrdered) {
  const auto w = W({2, 1, 2, 1});
  EXPECT_EQ(w.feet(1), std::make_pair(1, 3));
  EXPECT_EQ(w.feet(2), std::make_pair(0, 2));
  EXPECT_THROW(w.feet(3), std::out_of_range);
}

TEST(Permutations, FromPermutations) {
  EXPECT_EQ(from_permutations({{3, 4, 5, 1, 2, 6}, {1, 2, 3, 4, 5, 6}}), W({1, 2, 3, 4, 5, 6, 4, 5, 1, 2, 3, 6}));
  EXPECT_EQ(from_permutations({{1, 2, 3, 4}, {1, 2, 3, 4}}), W({1, 2, 3, 4, 1, 2, 3, 4}));
  EXPECT_EQ(from_permutations({{1, 2, 3, 4}, {1, 2, 4, 3}}), W({1, 2, 4, 3, 1, 2, 4, 3}));
  EXPECT_THROW(from_permutations({{1, 1}, {1, 2}}), std::invalid_argument);
  EXPECT_THROW(from_permutations({{1, 2}, {1, 2, 3}}), std::invalid_argument);
}

TEST(Permutations, ToPermutations) {
  const auto p = to_permutations(W({1, 2, 4, 3, 1, 2, 4, 3}));
  ASSERT_TRUE(p);
  EXPECT_EQ(p->sigma, (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(p->mu, (std::vector<int>{1, 2, 4, 3}));
  EXPECT_FALSE(to_permutations(W({1, 1, 2, 2})));
  const auto q = to_permutations(W({1, 2, 3, 4, 5, 6, 4, 5, 1, 2, 3, 6}));
  ASSERT_TRUE(q);
  EXPECT_EQ(q->sigma, (std::vector<int>{3, 4, 5, 1, 2, 6}));
  EXPECT_EQ(q->mu, (std::vector<int>{1, 2, 3, 4, 5, 6}));
}

TEST(Permutations, RoundTripOverAllOfSizeFour) {
  std::vector<int> sigma{1, 2, 3, 4};
  do {
    std::vector<int> mu{1, 2, 3, 4};
    do {
      const PermutationsPresentation p{sigma, mu};
      const auto back = to_permutations(from_permutations(p));
      ASSERT_TRUE(back);
      EXPECT_EQ(*back, p);
    } while (std::next_permutation(mu.begin(), mu.end()));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

TEST(Rotation, ShiftsCyclically) {
  const auto w = W({1, 1, 2, 2});
  EXPECT_EQ(rotate(w, 1), W({1, 2, 2, 1}));
  EXPECT_EQ(rotate(w, 0), w);
  EXPECT_EQ(rotate(w, 4), w);
  EXPECT_EQ(rotate(w, -1), W({2, 1, 1, 2}));
  EXPECT_EQ(rotate(W({}), 3), W({}));
}

TEST(Reduction, FindsCyclicPatterns) {
  EXPECT_EQ(find_reductions(W({1, 2, 1, 2})).front(), (Reduction{0, 1, 2}));
  EXPECT_TRUE(find_reductions(W({1, 2, 3, 4, 1, 2, 3, 4})).empty());
  const auto r = find_reductions(W({1, 3, 1, 2, 2, 3}));
  ASSERT_EQ(r.size(), 2U);
  EXPECT_EQ(r.front(), (Reduction{0, 1, 3}));
  EXPECT_EQ(r.back(), (Reduction{5, 3, 1}));
  // wraps around the end of the word
  EXPECT_FALSE(find_reductions(W({2, 1, 3, 3, 2, 1})).empty());
}

TEST(Reduction, DeletesTwoBandsAndRelabels) {
  EXPECT_EQ(apply_reduction(W({1, 2, 1, 2}), {0, 1, 2}), W({}));
  EXPECT_EQ(apply_reduction(W({1, 3, 1, 2, 2, 3}), {0, 1, 3}), W({1, 1}));
  EXPECT_EQ(apply_reduction(W({2, 1, 3, 1, 3, 2}), {1, 1, 3}), W({1, 1}));
  EXPECT_THROW(apply_reduction(W({1, 2, 1, 2}), {1, 1, 2}), InvalidMove);
}

TEST(Reduction, PreservesComponentCount) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto w = testing_support::random_word(rng, 2, 6);
    for (const auto& r : find_reductions(w)) {
      EXPECT_EQ(boundary_components(apply_reduction(w, r)).count, boundary_components(w).count);
    }
  }
}

TEST(Slide, FindsTheNamedSlides) {
  EXPECT_TRUE(find_slides(W({1, 1})).empty());
  EXPECT_TRUE(slide_at(W({1, 1, 2, 3, 3, 4, 4, 2}), 1, 2, true));
  EXPECT_TRUE(slide_at(W({1, 2, 3, 3, 2, 1, 4, 4}), 6, 1, false));
}

TEST(Slide, MovesFootPastTheOtherEnd) {
  auto s = slide_at(W({1, 1, 2, 3, 3, 4, 4, 2}), 1, 2, true);
  ASSERT_TRUE(s);
  EXPECT_EQ(apply_slide(W({1, 1, 2, 3, 3, 4, 4, 2}), *s), W({1, 2, 3, 3, 4, 4, 2, 1}));
  s = slide_at(W({1, 1, 2, 3, 3, 2, 4, 4}), 1, 2, true);
  ASSERT_TRUE(s);
  EXPECT_EQ(apply_slide(W({1, 1, 2, 3, 3, 2, 4, 4}), *s), W({1, 2, 3, 3, 2, 1, 4, 4}));
  s = slide_at(W({1, 2, 3, 3, 2, 1, 4, 4}), 6, 1, false);
  ASSERT_TRUE(s);
  EXPECT_EQ(apply_slide(W({1, 2, 3, 3, 2, 1, 4, 4}), *s), W({4, 1, 2, 3, 3, 2, 1, 4}));
}

TEST(Slide, RejectsMismatchedMoves) {
  EXPECT_THROW(apply_slide(W({1, 1, 2, 2}), {0, 2, 1, true, SlideEdge::Outer}), InvalidMove);
  EXPECT_THROW(apply_slide(W({1, 1, 2, 2}), {0, 1, 2, true, SlideEdge::Outer}), InvalidMove);
}

TEST(Slide, AdmissibleExcludesInterleavedPairs) {
  // band 2 interleaves band 1, so a foot of 2 cannot slide along 1
  const auto w = W({1, 2, 1, 3, 3, 2});
  for (const auto& s : find_slides(w)) EXPECT_FALSE(s.band == 2 && s.along == 1);
  EXPECT_GE(find_slides(w, SlideFilter::All).size(), find_slides(w).size());
}

TEST(Slide, PreservesComponentCount) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const auto w = testing_support::random_word(rng, 2, 6);
    for (const auto& s : find_slides(w)) {
      EXPECT_EQ(boundary_components(apply_slide(w, s)).count, boundary_components(w).count);
    }
  }
}

TEST(PageRelabel, DihedralMaps) {
  EXPECT_EQ(relabel_pages(W({1, 2, 3, 4, 1, 2, 3, 4}), PageReflection{}), W({4, 3, 2, 1, 4, 3, 2, 1}));
  EXPECT_EQ(relabel_pages(W({1, 1}), PageRotation{1}), W({1, 1}));
  EXPECT_EQ(relabel_pages(W({1, 2, 1, 2}), PageRotation{1}), W({2, 1, 2, 1}));
  EXPECT_TRUE(is_conjectural(PageRotation{1}));
  EXPECT_TRUE(is_conjectural(PageReflection{}));
  EXPECT_FALSE(is_conjectural(Rotation{1}));
}

TEST(CanonicalForm, LeastRotation) {
  EXPECT_EQ(canonical_form(W({2, 2, 1, 1})), W({1, 1, 2, 2}));
  EXPECT_EQ(canonical_form(W({1, 2, 1, 2})), W({1, 2, 1, 2}));
  std::mt19937_64 rng(9);
  for (int i = 0; i < 500; ++i) {
    const auto w = testing_support::random_word(rng, 0, 6);
    auto best = w;
    for (int k = 0; k < static_cast<int>(w.size()); ++k) best = std::min(best, rotate(w, k));
    EXPECT_EQ(canonical_form(w), best);
    EXPECT_EQ(canonical_form(rotate(w, 3)), best);
  }
  const auto w = W({4, 1, 2, 3, 1, 2, 3, 4});
  EXPECT_EQ(canonical_form(w), W({1, 2, 3, 1, 2, 3, 4, 4}));
}

TEST(Moves, DescribeAndDispatch) {
  const auto w = W({1, 2, 1, 2});
  EXPECT_EQ(apply_move(w, Rotation{1}), rotate(w, 1));
  EXPECT_EQ(apply_move(w, Reduction{0, 1, 2}), W({}));
  EXPECT_FALSE(describe(Reduction{0, 1, 2}).empty());
}
