#include <bimatch/hamsandwich.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support/fixtures.hpp"

namespace bimatch {
namespace {

using bmt::pt;

struct Counts {
  int red_pos = 0, blue_pos = 0, red_neg = 0, blue_neg = 0;
};

Counts count_sides(const BichromaticPointSet& P, const std::vector<int>& reds, const std::vector<int>& blues,
                   const Line& l) {
  Counts c;
  for (int r : reds) (l.eval(P.red(r)) > 0 ? c.red_pos : c.red_neg)++;
  for (int b : blues) (l.eval(P.blue(b)) > 0 ? c.blue_pos : c.blue_neg)++;
  return c;
}

std::vector<int> iota_ids(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i);
  return v;
}

void expect_ham_sandwich(const BichromaticPointSet& P, const Line& l) {
  const auto all = iota_ids(P.n());
  for (const Point& p : P.reds()) ASSERT_NE(l.eval(p), 0);
  for (const Point& p : P.blues()) ASSERT_NE(l.eval(p), 0);
  const Counts c = count_sides(P, all, all, l);
  EXPECT_EQ(c.red_pos, c.blue_pos);
  EXPECT_EQ(c.red_neg, c.blue_neg);
  EXPECT_EQ(std::min(c.red_pos, c.red_neg), static_cast<int>(P.n() / 2));
}

TEST(HamSandwichCut, SinglePair) {
  const BichromaticPointSet P({pt(1, 1)}, {pt(0, 0)});
  const HamSandwichCut cut = find_ham_sandwich_cut(P);
  expect_ham_sandwich(P, cut.line);
  EXPECT_TRUE(is_ham_sandwich_cut(P, cut.line));
  const int pos = cut.counts.red_pos + cut.counts.blue_pos;
  EXPECT_TRUE(pos == 0 || pos == 2);
}

TEST(HamSandwichCut, TwoPairsSplitOneAndOne) {
  const BichromaticPointSet P({pt(2, 1), pt(3, 11)}, {pt(0, 0), pt(1, 10)});
  const HamSandwichCut cut = find_ham_sandwich_cut(P);
  expect_ham_sandwich(P, cut.line);
  EXPECT_EQ(cut.counts, (SideCounts{1, 1, 1, 1}));
}

TEST(HamSandwichCut, MirroredInputGivesValidCut) {
  const BichromaticPointSet P({pt(2, -1), pt(3, -11)}, {pt(0, 0), pt(1, -10)});
  expect_ham_sandwich(P, find_ham_sandwich_cut(P).line);
}

TEST(HamSandwichCut, Deterministic) {
  std::mt19937 rng(2);
  const auto P = bmt::random_instance(5, rng);
  EXPECT_EQ(find_ham_sandwich_cut(P).line, find_ham_sandwich_cut(P).line);
}

TEST(HamSandwichCut, RandomInstancesCountCorrectly) {
  std::mt19937 rng(17);
  for (int n = 1; n <= 7; ++n) {
    for (int it = 0; it < 8; ++it) {
      const auto P = bmt::random_instance(n, rng);
      const HamSandwichCut cut = find_ham_sandwich_cut(P);
      expect_ham_sandwich(P, cut.line);
      const auto all = iota_ids(P.n());
      const Counts c = count_sides(P, all, all, cut.line);
      EXPECT_EQ(cut.counts, (SideCounts{c.blue_pos, c.red_pos, c.blue_neg, c.red_neg}));
    }
  }
}

TEST(HamSandwichCut, AvoidsCrossingsOfRedBlueSegments) {
  std::mt19937 rng(23);
  for (int it = 0; it < 20; ++it) {
    const auto P = bmt::random_instance(4, rng, 0, 40);
    const Line l = find_ham_sandwich_cut(P).line;
    std::vector<Scalar> pos;
    for (int r = 0; r < 4; ++r) {
      for (int b = 0; b < 4; ++b) {
        if (auto x = segment_line_intersection(Segment(P.red(r), P.blue(b)), l)) pos.push_back(l.position(*x));
      }
    }
    std::sort(pos.begin(), pos.end());
    EXPECT_EQ(std::adjacent_find(pos.begin(), pos.end()), pos.end());
  }
}

TEST(SideCounts, ThroughAPointIsAbsent) {
  const BichromaticPointSet P({pt(1, 1)}, {pt(0, 0)});
  EXPECT_FALSE(side_counts(P, Line::vertical(1)).has_value());
  EXPECT_FALSE(is_ham_sandwich_cut(P, Line::vertical(1)));
}

TEST(HamSandwichMatching, SinglePairIsALeaf) {
  const BichromaticPointSet P({pt(1, 1)}, {pt(0, 0)});
  const auto H = ham_sandwich_matching(P);
  EXPECT_EQ(H.matching, BRMatching({{0, 0}}));
  ASSERT_EQ(H.tree.nodes().size(), 1u);
  EXPECT_TRUE(H.tree.root().is_leaf());
}

// Each internal node splits its points by its cut; leaves hold one pair; the
// matching has one segment per leaf and no segment crosses an ancestor cut.
void expect_consistent_tree(const BichromaticPointSet& P, const HamSandwichMatching& H) {
  EXPECT_FALSE(validate_matching(P, H.matching).has_value());
  std::size_t leaves = 0;
  for (const CutNode& node : H.tree.nodes()) {
    if (node.is_leaf()) {
      ++leaves;
      ASSERT_EQ(node.reds.size(), 1u);
      ASSERT_EQ(node.blues.size(), 1u);
      EXPECT_TRUE(H.matching.contains({node.reds[0], node.blues[0]}));
      continue;
    }
    const BichromaticPointSet sub = P.subset(node.reds, node.blues);
    expect_ham_sandwich(sub, node.cut->line);
    const CutNode& pos = H.tree.node(node.positive);
    const CutNode& neg = H.tree.node(node.negative);
    for (int r : pos.reds) EXPECT_GT(node.cut->line.eval(P.red(r)), 0);
    for (int b : pos.blues) EXPECT_GT(node.cut->line.eval(P.blue(b)), 0);
    for (int r : neg.reds) EXPECT_LT(node.cut->line.eval(P.red(r)), 0);
    for (int b : neg.blues) EXPECT_LT(node.cut->line.eval(P.blue(b)), 0);
    EXPECT_EQ(pos.reds.size() + neg.reds.size(), node.reds.size());
    EXPECT_EQ(pos.blues.size() + neg.blues.size(), node.blues.size());
  }
  EXPECT_EQ(leaves, P.n());
}

TEST(HamSandwichMatching, TwoPairsOneSegmentPerSide) {
  const BichromaticPointSet P({pt(2, 1), pt(3, 11)}, {pt(0, 0), pt(1, 10)});
  const auto H = ham_sandwich_matching(P);
  expect_consistent_tree(P, H);
  const Line& l = H.tree.root().cut->line;
  EXPECT_TRUE(crossing_list(P, H.matching, l).empty());
}

TEST(HamSandwichMatching, RandomTreesAreConsistent) {
  std::mt19937 rng(29);
  for (int n = 1; n <= 8; ++n) {
    for (int it = 0; it < 4; ++it) {
      const auto P = bmt::random_instance(n, rng);
      const auto H = ham_sandwich_matching(P);
      expect_consistent_tree(P, H);
      EXPECT_LE(H.tree.depth(), 1 + static_cast<int>(std::ceil(std::log2(std::max(1, n)))) + 1);
    }
  }
}

}  // namespace
}  // namespace bimatch
