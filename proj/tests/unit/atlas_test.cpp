#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "fpb/atlas.hpp"
#include "fpb/text_format.hpp"

#include "json.hpp"

using namespace fpb;

namespace {

BasketWord W(std::initializer_list<int> letters) { return BasketWord::validate(letters); }

std::set<std::string> names_at(const Atlas& a, int n) {
  const auto v = a.names_at(n);
  return {v.begin(), v.end()};
}

}  // namespace

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_words(1, Dedup::None), std::vector<BasketWord>{W({1, 1})});
  EXPECT_EQ(enumerate_words(2, Dedup::None).size(), 6U);
  EXPECT_EQ(enumerate_words(3, Dedup::None).size(), 90U);
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(enumerate_words(n, Dedup::None).size(), word_count(n));
  EXPECT_EQ(word_count(6), 7484400U);
  EXPECT_THROW(enumerate_words(7, Dedup::None), CapExceeded);
  EXPECT_THROW(enumerate_words(3, Dedup::None, 2), CapExceeded);
}

TEST(Enumerate, RotationClassesCoverEveryWord) {
  for (int n = 1; n <= 4; ++n) {
    std::set<BasketWord> reps;
    for (const auto& w : enumerate_words(n, Dedup::Rotation)) reps.insert(w);
    for (const auto& w : enumerate_words(n, Dedup::None)) EXPECT_TRUE(reps.contains(canonical_form(w)));
  }
}

TEST(Enumerate, PermutationPresentations) {
  EXPECT_EQ(enumerate_permutation_presentations(1).size(), 1U);
  EXPECT_EQ(enumerate_permutation_presentations(3).size(), 36U);
  EXPECT_EQ(enumerate_permutation_presentations(4).size(), 576U);
  EXPECT_THROW(enumerate_permutation_presentations(7), CapExceeded);
}

TEST(Classify, NamedWords) {
  EXPECT_EQ(classify(W({1, 2, 3, 4, 1, 2, 3, 4})).name, "3_1");
  EXPECT_EQ(classify(W({1, 2, 4, 3, 1, 2, 4, 3})).name, "4_1");
  EXPECT_EQ(classify(W({1, 2, 3, 4, 5, 1, 4, 5, 2, 3})).name, "L4a1");
  EXPECT_EQ(classify(W({1, 2, 3, 4, 5, 6, 4, 5, 1, 2, 3, 6})).name, "5_2");
}

TEST(Classify, UnknownKeepsFingerprint) {
  // seven-band twist link, outside the named table
  const auto w = W({1, 2, 3, 4, 5, 6, 7, 1, 2, 3, 4, 5, 6, 7});
  const auto c = classify(w);
  EXPECT_EQ(c.name, kUnknown);
  EXPECT_EQ(c.fingerprint, fingerprint(w));
}

TEST(Atlas, SmallLevels) {
  const auto a = build_atlas(3);
  EXPECT_EQ(names_at(a, 0), (std::set<std::string>{"unknot"}));
  EXPECT_EQ(names_at(a, 1), (std::set<std::string>{"2-unlink"}));
  EXPECT_EQ(names_at(a, 2), (std::set<std::string>{"unknot", "3-unlink"}));
  EXPECT_EQ(names_at(a, 3), (std::set<std::string>{"2-unlink", "4-unlink", "L2a1"}));
  EXPECT_EQ(a.first_appearance("3-unlink"), 2);
  EXPECT_EQ(a.first_appearance("L2a1"), 3);
  EXPECT_FALSE(a.first_appearance("3_1"));
  EXPECT_TRUE(a.violations.empty());
  EXPECT_TRUE(a.relabeling_violations.empty());
}

TEST(Atlas, EntriesSortedAndCountsAddUp) {
  const auto a = build_atlas(4);
  std::uint64_t total[5] = {};
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    const auto& e = a.entries[i];
    EXPECT_EQ(canonical_form(e.word), e.word);
    total[e.n] += e.words;
    if (i > 0) {
      const auto& p = a.entries[i - 1];
      EXPECT_TRUE(p.n < e.n || (p.n == e.n && p.word < e.word));
    }
  }
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(total[n], word_count(n));
}

TEST(Atlas, IndependentOfWorkerCount) {
  setenv("FPB_THREADS", "1", 1);
  const auto serial = atlas_jsonl(build_atlas(4));
  setenv("FPB_THREADS", "4", 1);
  const auto parallel = atlas_jsonl(build_atlas(4));
  unsetenv("FPB_THREADS");
  EXPECT_EQ(serial, parallel);
}

TEST(Atlas, JsonLines) {
  const auto text = atlas_jsonl(build_atlas(2));
  std::istringstream in(text);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_TRUE(j.contains("word"));
    EXPECT_TRUE(j.contains("fingerprint"));
    EXPECT_EQ(format_word(parse_word(j["word"].get<std::string>())), j["word"].get<std::string>());
    ++lines;
  }
  // (), (1,1), (1,1,2,2), (1,2,1,2)
  EXPECT_EQ(lines, 4);
}

TEST(Atlas, CapIsEnforced) { EXPECT_THROW(build_atlas(7), CapExceeded); }

TEST(Fpbk, Values) {
  const auto unknot = fpbk_bound("unknot", 2);
  EXPECT_EQ(unknot.value, 0);

  const auto hopf = fpbk_bound("L2a1", 4);
  EXPECT_EQ(hopf.value, 3);

  const auto l4a1 = fpbk_bound("L4a1", 5);
  EXPECT_EQ(l4a1.value, 5);
  EXPECT_EQ(l4a1.witness, W({1, 2, 3, 4, 5, 1, 4, 5, 2, 3}));

  EXPECT_THROW(fpbk_bound("no-such-link", 3), std::invalid_argument);
}

TEST(Fpbk, ParityIsRespected) {
  const auto r = fpbk_bound("5_2", 6);
  ASSERT_EQ(r.value, 6);
  for (const auto& l : r.levels) {
    if (l.n % 2 == 1) EXPECT_EQ(l.status, FpbkLevel::Status::ParityExcluded);
  }
  EXPECT_EQ(r.levels.at(5).status, FpbkLevel::Status::ParityExcluded);
  EXPECT_EQ(r.levels.at(4).status, FpbkLevel::Status::Absent);
}

TEST(Fpbk, ReportsBoundWhenNotFound) {
  const auto r = fpbk_bound("5_2", 4);
  EXPECT_FALSE(r.value);
  EXPECT_FALSE(r.witness);
  EXPECT_EQ(r.lower_bound, 5);
  EXPECT_NE(fpbk_text(r).find("fpbk > 4"), std::string::npos);
}

TEST(PermutationTable, ShapeOfReport) {
  const auto r = reproduce_table1();
  EXPECT_EQ(r.cells.size(), 576U);
  std::size_t listed = 0;
  for (const auto& c : r.cells) listed += c.expected ? 1 : 0;
  // five full rows of 24 plus one listed set of 8
  EXPECT_EQ(listed, 5U * 24U + 8U);
  EXPECT_EQ(r.unlisted.size(), 576U - listed);
  const auto j = nlohmann::json::parse(permutation_table_json(r));
  EXPECT_EQ(j["cells"].size(), 576U);
  EXPECT_EQ(j["all_match"].get<bool>(), r.all_match());
}

TEST(PermutationTable, SpotCells) {
  const auto r = reproduce_table1();
  auto find = [&](const std::string& text) {
    const auto p = parse_permutations(text);
    for (const auto& c : r.cells) {
      if (c.presentation == p) return c;
    }
    throw std::logic_error("missing cell");
  };
  EXPECT_EQ(find("1234:2341").name, "3_1");
  EXPECT_EQ(find("1234:1243").name, "4_1");
  EXPECT_EQ(find("4321:3142").name, "5-unlink");
  EXPECT_EQ(find("1342:2413").name, "unknot");
  EXPECT_EQ(find("2341:1234").name, "L2a1_u_O");
}

TEST(Reachability, SmallCases) {
  const auto r = verify_theorem_3_1(3);
  EXPECT_TRUE(r.inconclusive.empty());
  bool saw = false;
  for (const auto& c : r.cases) {
    if (c.word == W({1, 1, 2, 2, 3, 3})) {
      saw = true;
      EXPECT_TRUE(c.reachable);
      EXPECT_EQ(c.depth, 1);
      ASSERT_FALSE(c.path.empty());
      EXPECT_EQ(c.path.front(), c.word);
    }
  }
  EXPECT_TRUE(saw);
  EXPECT_THROW(verify_theorem_3_1(5), std::invalid_argument);
}

TEST(Reachability, DepthZeroCapStillReports) {
  const auto r = verify_theorem_3_1(3, 0);
  EXPECT_FALSE(r.inconclusive.empty());
  for (const auto& c : r.inconclusive) EXPECT_EQ(c.depth, 0);
}
