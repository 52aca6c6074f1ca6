#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fpb/atlas.hpp"
#include "fpb/diagram.hpp"
#include "fpb/invariants.hpp"
#include "random_words.hpp"
#include "space_curves.hpp"

using namespace fpb;

// The combinatorial Seifert rule against linking numbers of explicit
// pushed-off band cores in R^3.
TEST(GeometryOracle, SeifertRuleMatchesCoreLinking) {
  int interleaved_pairs = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& w : enumerate_words(n, Dedup::None)) {
      const auto v = seifert_matrix(w);
      const auto lk = oracle::seifert_entries(w);
      ASSERT_EQ(v.entries, lk) << "word " << testing::PrintToString(w.letters());
      const auto c = to_chords(w);
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) interleaved_pairs += interleaved(c, i, j) ? 1 : 0;
      }
    }
  }
  EXPECT_GT(interleaved_pairs, 0);
}

// The staircase diagram against a projection of the surface boundary built
// from round band edges in tilted pages.
TEST(GeometryOracle, BoundaryDiagramMatchesSpaceModel) {
  std::vector<BasketWord> words;
  for (int n = 0; n <= 3; ++n) {
    for (const auto& w : enumerate_words(n, Dedup::Rotation)) words.push_back(w);
  }
  for (const char* s : {"1243:1234", "1243:1324", "2143:1324", "2143:1234", "1234:1234", "1234:1243", "2341:2143"}) {
    const std::string text(s);
    std::vector<int> sigma, mu;
    for (char ch : text.substr(0, 4)) sigma.push_back(ch - '0');
    for (char ch : text.substr(5, 4)) mu.push_back(ch - '0');
    words.push_back(from_permutations({sigma, mu}));
  }
  std::mt19937_64 rng(41);
  for (int i = 0; i < 12; ++i) words.push_back(testing_support::random_word(rng, 4));
  for (const auto& w : words) {
    const auto space = oracle::projected_diagram(oracle::basket_boundary(w));
    const auto stair = to_planar_diagram(w);
    EXPECT_EQ(space.component_count, stair.component_count);
    EXPECT_EQ(canonical_jones(space), canonical_jones(stair)) << testing::PrintToString(w.letters());
    EXPECT_EQ(linking_multiset(space), linking_multiset(stair));
  }
}
