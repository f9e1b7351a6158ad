#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace gammatop;
using namespace testing_support;

TEST(SetCover, SmallCases) {
  const std::vector<PointSet> sets{S("ab"), S("bc"), S("cd"), S("a"), S("d")};
  auto r = minimum_set_cover(sets, S("abcd"));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, (std::vector<std::size_t>{0, 2}));

  EXPECT_EQ(minimum_set_cover(sets, PointSet{}), std::optional<std::vector<std::size_t>>{std::vector<std::size_t>{}});
  EXPECT_FALSE(minimum_set_cover(sets, S("e")));
  EXPECT_FALSE(minimum_set_cover(std::vector<PointSet>{}, S("a")));
}

TEST(SetCover, EqualSetsPreferLowestIndex) {
  const std::vector<PointSet> sets{S("c"), S("ab"), S("ab")};
  auto r = minimum_set_cover(sets, S("a"));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, (std::vector<std::size_t>{1}));
}

TEST(SetCover, BeatsGreedy) {
  // Greedy takes {a,b,d,e} first and then needs two more sets.
  const std::vector<PointSet> sets{S("abde"), S("abc"), S("def")};
  auto r = minimum_set_cover(sets, S("abcdef"));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, (std::vector<std::size_t>{1, 2}));
}

TEST(SetCover, MatchesBruteForceOnRandomInstances) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t universe = 1 + rng() % 10;
    const std::size_t count = rng() % 13;
    std::vector<PointSet> sets;
    std::vector<oracle::Mask> masks;
    for (std::size_t i = 0; i < count; ++i) {
      const auto m = static_cast<PointSet::Mask>(rng() & ((1u << universe) - 1));
      sets.emplace_back(m);
      masks.push_back(m);
    }
    const auto target = PointSet(static_cast<PointSet::Mask>(rng() & ((1u << universe) - 1)));
    bool coverable = false;
    const std::size_t best = oracle::min_cover_size(masks, target.mask(), coverable);
    const auto got = minimum_set_cover(sets, target);
    ASSERT_EQ(got.has_value(), coverable);
    if (!got) continue;
    ASSERT_EQ(got->size(), best);
    PointSet u;
    for (std::size_t i : *got) u |= sets[i];
    ASSERT_TRUE(target.subset_of(u));
    ASSERT_TRUE(std::is_sorted(got->begin(), got->end()));
  }
}
