#include "kmroot/tuples.hpp"

#include <gtest/gtest.h>

#include <set>

namespace kmroot {
namespace {

FormulaParams params(int a1, int a2, int n1, int n2, int n3) { return FormulaParams::make(a1, a2, n1, n2, n3); }

IntervalConfig config(std::initializer_list<Interval> intervals) { return IntervalConfig{intervals}; }

template <typename F>
void for_grid(F f) {
  for (int a1 = 1; a1 <= 3; ++a1)
    for (int a2 = 1; a2 <= 3; ++a2)
      for (int n1 = 2; n1 <= 4; ++n1)
        for (int n2 = 2; n2 <= 5; ++n2)
          for (int n3 = 2; n3 <= 4; ++n3) f(params(a1, a2, n1, n2, n3));
}

TEST(Compositions, CountsAndOrder) {
  const auto c = compositions(2, 3);
  ASSERT_EQ(c.size(), 6u);
  EXPECT_EQ(c.front(), (std::vector<int>{2, 0, 0}));
  EXPECT_EQ(c.back(), (std::vector<int>{0, 0, 2}));
  EXPECT_EQ(compositions(0, 0).size(), 1u);
  EXPECT_TRUE(compositions(1, 0).empty());
  for (int n = 0; n <= 6; ++n)
    for (int l = 1; l <= 6; ++l) EXPECT_EQ(BigInt(static_cast<unsigned long>(compositions(n, l).size())), stars_and_bars(n, l));
}

TEST(EnumerateConfigs, Examples) {
  const auto c = enumerate_configs(params(1, 2, 2, 2, 2));
  ASSERT_EQ(c.size(), 5u);
  std::set<std::pair<int, int>> firsts;
  for (const auto& cfg : c) {
    firsts.insert({cfg.intervals[0].ones, cfg.intervals[0].threes});
    EXPECT_TRUE(is_valid_config(cfg, params(1, 2, 2, 2, 2)));
  }
  EXPECT_EQ(firsts, (std::set<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}}));
  EXPECT_EQ(enumerate_configs(params(1, 1, 2, 2, 2)).size(), 3u);
}

TEST(EnumerateConfigs, Deterministic) {
  const auto p = params(2, 3, 4, 3, 3);
  EXPECT_EQ(enumerate_configs(p), enumerate_configs(p));
}

TEST(TrivialPattern, Examples) {
  EXPECT_TRUE(is_trivial_pattern(config({{1, 0}, {1, 2}}), params(1, 2, 2, 2, 2)));
  EXPECT_FALSE(is_trivial_pattern(config({{0, 2}, {2, 0}}), params(1, 2, 2, 2, 2)));
  EXPECT_TRUE(is_trivial_pattern(config({{1, 0}, {0, 0}, {1, 2}}), params(2, 2, 2, 3, 2)));
  EXPECT_FALSE(is_trivial_pattern(config({{1, 0}, {1, 0}, {0, 2}}), params(2, 2, 2, 3, 2)));
  // (0,1) needs a2 = 2 empty-run and n2 ≥ 3.
  EXPECT_FALSE(is_trivial_pattern(config({{0, 1}, {2, 1}}), params(1, 2, 2, 2, 2)));
}

TEST(DependentPattern, Examples) {
  EXPECT_TRUE(is_dependent_pattern(config({{0, 2}, {2, 0}})));
  EXPECT_FALSE(is_dependent_pattern(config({{1, 1}, {1, 1}})));
  EXPECT_TRUE(is_dependent_pattern(config({{2, 0}, {0, 0}, {0, 2}})));
}

TEST(CountCanonical, Examples) {
  const auto a = count_canonical(params(1, 2, 2, 2, 2));
  EXPECT_EQ(a.raw, 5u);
  EXPECT_EQ(a.trivial, 1u);
  EXPECT_EQ(a.dependent, 1u);
  EXPECT_EQ(a.canonical, 3u);

  const auto b = count_canonical(params(2, 2, 2, 3, 2));
  EXPECT_EQ(b.raw, 27u);
  EXPECT_EQ(b.trivial, 2u);
  EXPECT_EQ(b.dependent, 6u);
  EXPECT_EQ(b.canonical, 19u);
}

TEST(CountIdentities, AAndGuardedBHoldOnGrid) {
  for_grid([](const FormulaParams& p) {
    const auto c = count_canonical(p);
    EXPECT_EQ(BigInt(static_cast<unsigned long>(c.raw)), compute_A(p));
    EXPECT_EQ(BigInt(static_cast<unsigned long>(c.dependent)), compute_B(p, BVariant::kGuarded));
    EXPECT_EQ(c.canonical, c.raw - c.trivial - c.dependent);
  });
}

TEST(CountIdentities, TrivialCountMatchesIntervalModel) {
  // With I1 = e_i and the next a_i − 1 intervals empty, the remaining balls
  // fill the last n2 − a_i intervals independently.
  for_grid([](const FormulaParams& p) {
    BigInt expected = 0;
    if (p.n2 >= p.a1 + 1) expected += stars_and_bars(p.n1 - 1, p.n2 - p.a1) * stars_and_bars(p.n3, p.n2 - p.a1);
    if (p.n2 >= p.a2 + 1) expected += stars_and_bars(p.n1, p.n2 - p.a2) * stars_and_bars(p.n3 - 1, p.n2 - p.a2);
    EXPECT_EQ(BigInt(static_cast<unsigned long>(count_canonical(p).trivial)), expected);
  });
}

TEST(CountIdentities, TrivialCountVersusClosedFormCounterexample) {
  // The closed-form C1 treats the leftover 1s and 3s as one pool of balls,
  // so it undercounts the interval model: 12 trivial configs against 4 + 4.
  const auto p = params(1, 1, 2, 3, 2);
  const auto [c1, c2] = compute_C(p);
  EXPECT_EQ(c1 + c2, 8);
  EXPECT_EQ(count_canonical(p).trivial, 12u);
}

TEST(ConfigToTuple, Examples) {
  EXPECT_EQ(config_to_tuple(config({{1, 0}, {1, 2}})), (StandardTuple{3, 3, 1, 2, 1, 2}));
  EXPECT_EQ(config_to_tuple(config({{0, 1}, {2, 1}})), (StandardTuple{3, 1, 1, 2, 3, 2}));
  EXPECT_EQ(config_to_tuple(config({{1, 1}})), (StandardTuple{3, 1, 2}));
}

TEST(ConfigToTuple, WeightMatches) {
  const auto p = params(2, 2, 3, 3, 2);
  for (const auto& c : enumerate_configs(p)) {
    const StandardTuple t = config_to_tuple(c);
    EXPECT_EQ(word_weight(t.letters, 3), p.weight());
    EXPECT_EQ(t.letters.back(), 2);
  }
}

TEST(IndependentRankCheck, Examples) {
  const auto r = independent_rank_check(paper_shape(1, 2), params(1, 2, 2, 2, 2));
  EXPECT_EQ(r.canonical_count, 3u);
  EXPECT_EQ(r.oracle_mult, 1u);
  EXPECT_LE(r.rank_in_quotient, r.oracle_mult);

  const auto f = independent_rank_check(paper_shape(1, 1), params(1, 1, 2, 2, 2));
  EXPECT_EQ(f.oracle_mult, 0u);
  EXPECT_EQ(f.rank_in_quotient, 0u);
}

TEST(IndependentRankCheck, SandwichOnSmallGrid) {
  for (const auto& [a1, a2] : {std::pair{1, 2}, std::pair{2, 2}}) {
    QuotientOracle oracle(paper_shape(a1, a2));
    for (int n1 = 2; n1 <= 3; ++n1)
      for (int n2 = 2; n2 <= 3; ++n2)
        for (int n3 = 2; n3 <= 3; ++n3) {
          const auto r = independent_rank_check(oracle, params(a1, a2, n1, n2, n3));
          EXPECT_LE(r.rank_in_quotient, r.oracle_mult);
          EXPECT_LE(r.rank_in_quotient, r.canonical_count);
        }
  }
}

}  // namespace
}  // namespace kmroot
