#include <bimatch/explorer.hpp>
#include <bimatch/matching.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support/fixtures.hpp"

namespace bimatch {
namespace {

using bmt::pt;

// Two segments straddling x = 0: s1 runs blue (-2,0) to red (2,1), s2 red
// (-3,5) to blue (3,4). s1 has its blue end on the negative side, s2 its red.
BichromaticPointSet two_segments() { return BichromaticPointSet({pt(2, 1), pt(-3, 5)}, {pt(-2, 0), pt(3, 4)}); }
BRMatching two_segments_matching() { return BRMatching({{0, 0}, {1, 1}}); }

TEST(PointSet, RejectsUnbalancedAndDegenerate) {
  EXPECT_THROW(BichromaticPointSet({pt(0, 0)}, {}), PreconditionError);
  EXPECT_THROW(BichromaticPointSet({pt(0, 0), pt(2, 0)}, {pt(1, 0), pt(3, 5)}), PreconditionError);
  EXPECT_THROW(BichromaticPointSet({pt(0, 0)}, {pt(0, 1)}), PreconditionError);
}

TEST(PointSet, SubsetKeepsOrder) {
  std::mt19937 rng(3);
  const auto P = bmt::random_instance(4, rng);
  const auto S = P.subset({3, 1}, {0, 2});
  ASSERT_EQ(S.n(), 2u);
  EXPECT_EQ(S.red(0), P.red(3));
  EXPECT_EQ(S.red(1), P.red(1));
  EXPECT_EQ(S.blue(1), P.blue(2));
}

TEST(Validate, SingleSegment) {
  const BichromaticPointSet P({pt(0, 0)}, {pt(1, 1)});
  EXPECT_FALSE(validate_matching(P, BRMatching({{0, 0}})).has_value());
}

TEST(Validate, CrossingPairIsReported) {
  const BichromaticPointSet P({pt(0, 0), pt(1, 3)}, {pt(3, 2), pt(2, -1)});
  const auto v = validate_matching(P, BRMatching({{0, 0}, {1, 1}}));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, MatchingViolation::Kind::Crossing);
  ASSERT_EQ(v->witnesses.size(), 2u);
  EXPECT_FALSE(validate_matching(P, BRMatching({{0, 1}, {1, 0}})).has_value());
}

TEST(Validate, ReusedRedIsNotPerfect) {
  const BichromaticPointSet P({pt(0, 0), pt(1, 3)}, {pt(3, 2), pt(2, -1)});
  const auto v = validate_matching(P, BRMatching({{0, 0}, {0, 1}}));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, MatchingViolation::Kind::NotPerfect);
  EXPECT_THROW(require_valid(P, BRMatching({{0, 0}, {0, 1}})), InvalidMatchingError);
  EXPECT_THROW(validate_matching(P, BRMatching({{0, 5}, {1, 0}})), InvalidMatchingError);
}

TEST(Compatible, SelfCompatible) {
  const auto P = two_segments();
  EXPECT_TRUE(compatible(P, two_segments_matching(), two_segments_matching()));
}

TEST(Compatible, SmallInstanceAgreesWithAllPairsCheck) {
  const BichromaticPointSet P({pt(1, 2), pt(2, -1)}, {pt(0, 0), pt(3, 1)});
  const BRMatching M({{0, 0}, {1, 1}});
  const BRMatching M2({{0, 1}, {1, 0}});
  EXPECT_EQ(compatible(P, M, M2), bmt::union_plane(P, M, M2));
}

TEST(Compatible, LowerBoundInnerPairsClash) {
  const auto lb = lower_bound_instance(2);
  EXPECT_EQ(compatible(lb.P, lb.M, lb.M2), bmt::union_plane(lb.P, lb.M, lb.M2));
  EXPECT_FALSE(compatible(lb.P, lb.M, lb.M2));
}

TEST(Compatible, RandomAgreesWithOracle) {
  std::mt19937 rng(11);
  for (int it = 0; it < 60; ++it) {
    const auto P = bmt::random_instance(4, rng, 0, 60);
    const auto all = bmt::permutation_oracle(P);
    const std::vector<BRMatching> v(all.begin(), all.end());
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = 0; j < v.size(); ++j) EXPECT_EQ(compatible(P, v[i], v[j]), bmt::union_plane(P, v[i], v[j]));
    }
  }
}

TEST(CrossingList, EmptyWhenNothingTouchesTheLine) {
  const BichromaticPointSet P({pt(1, 0), pt(3, 4)}, {pt(2, 5), pt(4, 1)});
  EXPECT_TRUE(crossing_list(P, BRMatching({{0, 1}, {1, 0}}), Line::vertical(0)).empty());
}

TEST(CrossingList, SortedBottomToTop) {
  const BichromaticPointSet P({pt(-1, 0), pt(-2, 2)}, {pt(1, 0), pt(2, 2)});
  const auto cl = crossing_list(P, BRMatching({{0, 0}, {1, 1}}), Line::vertical(0));
  ASSERT_EQ(cl.size(), 2u);
  EXPECT_EQ(cl[0].pair, (MatchPair{0, 0}));
  EXPECT_EQ(cl[0].at, pt(0, 0));
  EXPECT_EQ(cl[1].pair, (MatchPair{1, 1}));
  EXPECT_EQ(cl[1].at, pt(0, 2));
}

TEST(CrossingList, RandomAgreesWithFilterAndSort) {
  std::mt19937 rng(5);
  for (int it = 0; it < 100; ++it) {
    const auto P = bmt::random_instance(4, rng, 0, 1000);
    const auto M = bmt::uncrossed_matching(P, rng);
    const long a = static_cast<long>(rng() % 7) + 1;
    const long b = static_cast<long>(rng() % 9) - 4;
    const long off = static_cast<long>(rng() % 201) - 100;
    const Line l = Line::from_coefficients(a, b, -500 * (a + b) + off);
    bool touches = false;
    for (const Point& p : P.reds()) touches = touches || l.eval(p) == 0;
    for (const Point& p : P.blues()) touches = touches || l.eval(p) == 0;
    if (touches) continue;
    std::vector<std::pair<Scalar, MatchPair>> want;
    for (const MatchPair& p : M.pairs()) {
      const Scalar er = l.eval(P.red(p.red)), eb = l.eval(P.blue(p.blue));
      if ((er < 0) == (eb < 0)) continue;
      const Scalar t = er / (er - eb);
      const Point x = lerp(P.red(p.red), P.blue(p.blue), t);
      want.emplace_back(-l.b() * x.x + l.a() * x.y, p);
    }
    std::sort(want.begin(), want.end());
    const auto got = crossing_list(P, M, l);
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i].pair, want[i].second);
  }
}

TEST(ChromaticCut, Examples) {
  const auto P = two_segments();
  const Line l = Line::vertical(0);
  EXPECT_EQ(left_color(P, {0, 0}, l), Color::Blue);
  EXPECT_EQ(left_color(P, {1, 1}, l), Color::Red);
  EXPECT_TRUE(is_chromatic_cut(P, two_segments_matching(), l));

  // both blue on the left
  const BichromaticPointSet Q({pt(2, 1), pt(3, 5)}, {pt(-2, 0), pt(-3, 4)});
  EXPECT_FALSE(is_chromatic_cut(Q, BRMatching({{0, 0}, {1, 1}}), l));

  // a single crossing segment
  const BichromaticPointSet S({pt(2, 1), pt(4, 5)}, {pt(-2, 0), pt(3, 4)});
  EXPECT_FALSE(is_chromatic_cut(S, BRMatching({{0, 0}, {1, 1}}), l));
}

TEST(Chi, BitsMarkTheCandidatesInM) {
  const auto P = two_segments();
  const Line l = Line::vertical(0);
  const auto cands = crossing_candidates(P, l);
  // every red-blue segment whose endpoints straddle x = 0
  int straddling = 0;
  for (int r = 0; r < 2; ++r) {
    for (int b = 0; b < 2; ++b) straddling += (P.red(r).x > 0) != (P.blue(b).x > 0);
  }
  ASSERT_EQ(static_cast<int>(cands.size()), straddling);
  const ChiMeasure c = chi(P, l, two_segments_matching());
  ASSERT_EQ(c.bits().size(), cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i) {
    EXPECT_EQ(c.bits()[i], two_segments_matching().contains(cands[i].pair));
  }
  EXPECT_EQ(c.popcount(), 2u);
}

TEST(Chi, ZeroWithoutCrossings) {
  const BichromaticPointSet P({pt(-2, 1), pt(3, 4)}, {pt(-1, 5), pt(4, 1)});
  const ChiMeasure c = chi(P, Line::vertical(0), BRMatching({{0, 0}, {1, 1}}));
  EXPECT_EQ(c.popcount(), 0u);
  EXPECT_EQ(c.bits().size(), 2u);
}

TEST(Chi, OrdersAsBinaryNumbers) {
  EXPECT_LT(ChiMeasure({false, true, true}), ChiMeasure({true, false, false}));
  EXPECT_LT(ChiMeasure({false, true, false}), ChiMeasure({false, true, true}));
  EXPECT_EQ(ChiMeasure({true, false}).to_string(), "10");
}

TEST(Chi, LowerBoundInstanceMatchesEnumeration) {
  const auto lb = lower_bound_instance(2);
  const Line l = Line::vertical(Scalar(1, 1000));
  const auto cands = crossing_candidates(lb.P, l);
  std::vector<std::pair<Scalar, MatchPair>> want;
  for (int r = 0; r < 4; ++r) {
    for (int b = 0; b < 4; ++b) {
      if (auto x = segment_line_intersection(Segment(lb.P.red(r), lb.P.blue(b)), l)) want.emplace_back(x->y, MatchPair{r, b});
    }
  }
  std::sort(want.begin(), want.end());
  ASSERT_EQ(cands.size(), want.size());
  const ChiMeasure c = chi(lb.P, l, lb.M);
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_EQ(cands[i].pair, want[i].second);
    EXPECT_EQ(c.bits()[i], lb.M.contains(want[i].second));
  }
}

}  // namespace
}  // namespace bimatch
