#include <gtest/gtest.h>

#include "fpb/invariants.hpp"
#include "fpb/named_links.hpp"
#include "fpb/reference_diagrams.hpp"
#include "state_sum.hpp"

using namespace fpb;

namespace {

LaurentPolynomial q(std::vector<LaurentPolynomial::Term> terms) { return LaurentPolynomial::from_terms(terms, 'q'); }

// Jones from the brute-force bracket, least over orientations and mirror.
LaurentPolynomial oracle_jones(const PlanarDiagram& d) {
  const auto bracket = oracle::state_sum_bracket(d);
  std::optional<LaurentPolynomial> best;
  const int comps = d.component_count;
  for (unsigned mask = 0; mask < (1U << std::max(0, comps - 1)); ++mask) {
    std::vector<char> rev(static_cast<std::size_t>(comps), 0);
    for (int c = 1; c < comps; ++c) rev[static_cast<std::size_t>(c)] = (mask >> (c - 1)) & 1U;
    const auto v = jones_for_orientation(bracket, orient_and_writhe(d, rev).writhe);
    for (const auto& cand : {v, v.substitute_power(-1)}) {
      if (!best || cand < *best) best = cand;
    }
  }
  return *best;
}

}  // namespace

// Each basket word in the table and its independent reference diagram must
// describe the same link.
TEST(ReferenceLinks, WordsAgreeWithReferenceDiagrams) {
  for (const auto& e : NamedLinkTable::standard().entries()) {
    const auto from_diagram = diagram_fingerprint(e.diagram);
    EXPECT_EQ(from_diagram.components, e.fingerprint.components) << e.name;
    EXPECT_EQ(from_diagram.jones, e.fingerprint.jones) << e.name;
    EXPECT_EQ(from_diagram.linking, e.fingerprint.linking) << e.name;
  }
}

TEST(ReferenceLinks, ReferenceDiagramsAgreeWithStateSum) {
  for (const auto& e : NamedLinkTable::standard().entries()) {
    if (e.diagram.crossings.size() > 16) continue;
    EXPECT_EQ(oracle_jones(e.diagram), e.fingerprint.jones) << e.name;
  }
}

// Published Jones polynomials, written in q = t^(1/2) and reduced to the
// least of V(q), V(1/q) over orientations.
TEST(ReferenceLinks, PublishedJonesValues) {
  const auto& t = NamedLinkTable::standard();
  EXPECT_EQ(t.find("3_1")->fingerprint.jones, q({{-8, -1}, {-6, 1}, {-2, 1}}));
  EXPECT_EQ(t.find("4_1")->fingerprint.jones, q({{-4, 1}, {-2, -1}, {0, 1}, {2, -1}, {4, 1}}));
  EXPECT_EQ(t.find("5_2")->fingerprint.jones, q({{-12, -1}, {-10, 1}, {-8, -1}, {-6, 2}, {-4, -1}, {-2, 1}}));
  EXPECT_EQ(t.find("L2a1")->fingerprint.jones, q({{-5, -1}, {-1, -1}}));
  EXPECT_EQ(t.find("L4a1")->fingerprint.jones, q({{-11, -1}, {-9, 1}, {-7, -1}, {-3, -1}}));
  EXPECT_EQ(t.find("L2a1_u_O")->fingerprint.jones, q({{-6, 1}, {-4, 1}, {-2, 1}, {0, 1}}));
  EXPECT_EQ(t.find("L2a1#L2a1")->fingerprint.jones, q({{-10, 1}, {-6, 2}, {-2, 1}}));
  EXPECT_EQ(t.find("L6n1")->fingerprint.jones, q({{-12, 2}, {-8, 1}, {-4, 1}}));
  EXPECT_EQ(t.find("L6a5")->fingerprint.jones,
            q({{-14, 1}, {-12, -1}, {-10, 3}, {-8, -1}, {-6, 3}, {-4, -2}, {-2, 1}}));
}

TEST(ReferenceLinks, PublishedLinkingNumbers) {
  const auto& t = NamedLinkTable::standard();
  EXPECT_EQ(t.find("L2a1")->fingerprint.linking, (std::vector<int>{1}));
  EXPECT_EQ(t.find("L4a1")->fingerprint.linking, (std::vector<int>{2}));
  EXPECT_EQ(t.find("L2a1_u_O")->fingerprint.linking, (std::vector<int>{0, 0, 1}));
  EXPECT_EQ(t.find("L2a1#L2a1")->fingerprint.linking, (std::vector<int>{0, 1, 1}));
  EXPECT_EQ(t.find("L6a5")->fingerprint.linking, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(t.find("L6n1")->fingerprint.linking, (std::vector<int>{1, 1, 1}));
}

TEST(ReferenceLinks, BorromeanRingsStayDistinct) {
  // sigma1 sigma2^-1 cubed: zero linking, not in the table
  const auto borromean = braid_closure(3, {1, -2, 1, -2, 1, -2});
  const auto f = diagram_fingerprint(borromean);
  EXPECT_EQ(f.linking, (std::vector<int>{0, 0, 0}));
  for (const auto& e : NamedLinkTable::standard().entries()) EXPECT_FALSE(matches(e, f)) << e.name;
}
