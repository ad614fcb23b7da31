#include "linarr/metrics.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "test_support.hpp"

namespace linarr {
namespace {

arrangement random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<vertex> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<vertex>(i + 1);
  std::shuffle(order.begin(), order.end(), rng);
  return arrangement::from_order(order);
}

TEST(CostTest, Examples) {
  EXPECT_EQ(cost(testing::p3(), arrangement::identity(3)), 2u);
  EXPECT_EQ(cost(testing::p3(), arrangement(std::vector<position>{1, 3, 2})), 3u);
  EXPECT_EQ(cost(testing::sep6_tree(), testing::sep6_planar_arrangement()), 6u);
  EXPECT_EQ(cost(free_tree(1, std::span<const edge>{}), arrangement::identity(1)), 0u);
}

TEST(CostTest, RejectsSizeMismatch) {
  EXPECT_THROW(cost(testing::p3(), arrangement::identity(4)), tree_error);
}

TEST(PlanarityTest, Examples) {
  EXPECT_TRUE(is_planar(testing::p4(), arrangement::identity(4)));

  const free_tree crossing(4, {{1, 3}, {3, 2}, {2, 4}});
  const auto id = arrangement::identity(4);
  EXPECT_FALSE(is_planar(crossing, id));
  const auto naive = find_crossing_pairwise(crossing, id);
  ASSERT_TRUE(naive);
  EXPECT_EQ(naive->first, (edge{1, 3}));
  EXPECT_EQ(naive->second, (edge{2, 4}));
  const auto fast = find_crossing(crossing, id);
  ASSERT_TRUE(fast);
  EXPECT_TRUE(crosses(fast->first, fast->second, id));
}

TEST(PlanarityTest, SharedEndpointsNeverCross) {
  const auto star = testing::star5();
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    std::mt19937_64 rng(seed);
    EXPECT_TRUE(is_planar(star, random_permutation(5, rng)));
  }
}

TEST(PlanarityTest, LinearCheckAgreesWithPairwise) {
  std::mt19937_64 rng(123);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 1 + rng() % 12;
    const auto t = random_tree(n, rng());
    const auto arr = random_permutation(n, rng);
    const auto naive = find_crossing_pairwise(t, arr);
    const auto fast = find_crossing(t, arr);
    ASSERT_EQ(naive.has_value(), fast.has_value());
    if (fast) {
      EXPECT_TRUE(crosses(fast->first, fast->second, arr));
    }
  }
}

TEST(ProjectivityTest, SeparatingTreeArrangement) {
  const auto t = testing::sep6_tree();
  const auto arr = testing::sep6_planar_arrangement();
  EXPECT_TRUE(is_planar(t, arr));
  const auto at1 = check_projectivity(root_at(t, 1), arr);
  EXPECT_TRUE(at1);
  EXPECT_FALSE(at1.crossing);
  ASSERT_TRUE(at1.root_cover);
  EXPECT_EQ(*at1.root_cover, (edge{3, 2}));
  EXPECT_TRUE(is_projective(root_at(t, 2), arr));
}

TEST(ProjectivityTest, RootAtAnEndIsNeverCovered) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng() % 10;
    const auto t = random_tree(n, rng());
    const auto arr = random_permutation(n, rng);
    if (!is_planar(t, arr)) continue;
    const vertex first = arr.order().front();
    EXPECT_TRUE(is_projective(root_at(t, first), arr));
  }
}

TEST(ProjectivityTest, CrossingReportedBeforeCover) {
  const free_tree t(4, {{1, 3}, {3, 2}, {2, 4}});
  const auto why = check_projectivity(root_at(t, 2), arrangement::identity(4));
  EXPECT_TRUE(why.crossing);
  EXPECT_FALSE(is_projective(root_at(t, 1), arrangement::identity(4)));
}

TEST(MetricsPropertyTest, MirrorInvariance) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng() % 10;
    const auto t = random_tree(n, rng());
    const auto arr = random_permutation(n, rng);
    const auto mirror = arr.mirrored();
    EXPECT_EQ(cost(t, arr), cost(t, mirror));
    EXPECT_EQ(is_planar(t, arr), is_planar(t, mirror));
    const vertex r = static_cast<vertex>(1 + rng() % n);
    const auto rt = root_at(t, r);
    const bool projective = is_projective(rt, arr);
    EXPECT_EQ(projective, is_projective(rt, mirror));
    if (projective) {
      EXPECT_TRUE(is_planar(t, arr));
    }
  }
}

}  // namespace
}  // namespace linarr
