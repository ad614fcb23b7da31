#include "linarr/tree.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "test_support.hpp"

namespace linarr {
namespace {

using ::testing::HasSubstr;

TEST(FreeTreeTest, BuildsPathAndStar) {
  const auto p = testing::p3();
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(p.degree(2), 2u);
  EXPECT_EQ(std::vector<vertex>(p.neighbors(2).begin(), p.neighbors(2).end()), (std::vector<vertex>{1, 3}));

  const free_tree star(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
  EXPECT_EQ(star.degree(1), 4u);
  for (vertex leaf = 2; leaf <= 5; ++leaf) EXPECT_EQ(star.degree(leaf), 1u);
}

TEST(FreeTreeTest, SingleVertex) {
  const free_tree t(1, std::span<const edge>{});
  EXPECT_EQ(t.size(), 1u);
  EXPECT_TRUE(t.edges().empty());
  EXPECT_EQ(t.degree(1), 0u);
}

TEST(FreeTreeTest, RejectsMalformedInput) {
  auto message = [](std::size_t n, std::initializer_list<edge> edges) {
    try {
      free_tree t(n, edges);
    } catch (const tree_error& e) {
      return std::string(e.what());
    }
    return std::string("accepted");
  };
  EXPECT_THAT(message(4, {{1, 2}, {3, 4}}), HasSubstr("disconnected"));
  EXPECT_THAT(message(3, {{1, 2}, {2, 3}, {3, 1}}), HasSubstr("cycle"));
  EXPECT_THAT(message(4, {{1, 2}, {2, 3}, {3, 1}}), HasSubstr("cycle"));
  EXPECT_THAT(message(3, {{1, 2}, {2, 1}}), HasSubstr("duplicate"));
  EXPECT_THAT(message(3, {{1, 2}, {2, 4}}), HasSubstr("outside"));
  EXPECT_THAT(message(3, {{0, 1}, {1, 2}}), HasSubstr("outside"));
  EXPECT_THAT(message(2, {{2, 2}}), HasSubstr("self-loop"));
  EXPECT_THROW(free_tree(0, std::span<const edge>{}), tree_error);
}

TEST(RootedTreeTest, ParentsOfPathAndStar) {
  const auto p = testing::p3();
  const auto at2 = root_at(p, 2);
  EXPECT_EQ(at2.parent(1), 2u);
  EXPECT_EQ(at2.parent(3), 2u);
  EXPECT_EQ(at2.parent(2), no_vertex);

  const auto at1 = root_at(p, 1);
  EXPECT_EQ(at1.parent(2), 1u);
  EXPECT_EQ(at1.parent(3), 2u);
  EXPECT_EQ(at1.children(1).size(), 1u);

  const auto star = root_at(testing::star5(), 2);
  EXPECT_EQ(star.parent(1), 2u);
  for (vertex v : {3u, 4u, 5u}) EXPECT_EQ(star.parent(v), 1u);
  EXPECT_EQ(star.children(1).size(), 3u);
}

TEST(RootedTreeTest, RejectsRootOutOfRange) {
  EXPECT_THROW(root_at(testing::p3(), 0), tree_error);
  EXPECT_THROW(root_at(testing::p3(), 4), tree_error);
}

TEST(RootedTreeTest, HeadVectorRoundTrip) {
  const std::vector<vertex> heads{2, 0, 2, 3, 2, 5};
  const auto t = from_head_vector(heads);
  EXPECT_EQ(t.root(), 2u);
  EXPECT_EQ(head_vector(t), heads);
  EXPECT_THROW(from_head_vector(std::vector<vertex>{0, 0}), tree_error);
  EXPECT_THROW(from_head_vector(std::vector<vertex>{2, 1}), tree_error);
  EXPECT_THROW(from_head_vector(std::vector<vertex>{2, 3, 1, 0}), tree_error);
}

TEST(ArrangementTest, RejectsNonBijections) {
  EXPECT_THROW(arrangement(std::vector<position>{1, 1, 2}), tree_error);
  EXPECT_THROW(arrangement(std::vector<position>{1, 4, 2}), tree_error);
  EXPECT_THROW(arrangement(std::vector<position>{0, 1}), tree_error);
  const auto a = arrangement::from_order(std::vector<vertex>{3, 1, 2});
  EXPECT_EQ(a[3], 1u);
  EXPECT_EQ(a[1], 2u);
  EXPECT_EQ(a.order(), (std::vector<vertex>{3, 1, 2}));
  EXPECT_EQ(a.mirrored().order(), (std::vector<vertex>{2, 1, 3}));
}

TEST(RandomTreeTest, SmallCasesAndDeterminism) {
  EXPECT_EQ(random_tree(1, 7).size(), 1u);
  const auto two = random_tree(2, 99);
  ASSERT_EQ(two.edges().size(), 1u);
  EXPECT_EQ(testing::edge_set(two), (std::vector<std::pair<vertex, vertex>>{{1, 2}}));

  const auto a = random_tree(8, 42);
  const auto b = random_tree(8, 42);
  EXPECT_EQ(a.edges(), b.edges());
  EXPECT_THROW(random_tree(0, 1), tree_error);
}

TEST(RandomTreeTest, EveryTreeIsConnected) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto t = random_tree(1 + seed % 60, seed);
    EXPECT_EQ(t.edges().size(), t.size() - 1);
    // traversal from 1 reaches everything
    std::vector<bool> seen(t.size() + 1, false);
    std::vector<vertex> stack{1};
    seen[1] = true;
    std::size_t visited = 0;
    while (!stack.empty()) {
      const vertex u = stack.back();
      stack.pop_back();
      ++visited;
      for (vertex w : t.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    EXPECT_EQ(visited, t.size());
  }
}

TEST(PruferTest, RoundTripOverAllSequences) {
  for (std::size_t n = 3; n <= 7; ++n) {
    std::vector<vertex> seq(n - 2, 1);
    std::size_t checked = 0;
    while (true) {
      EXPECT_EQ(prufer_encode(prufer_decode(n, seq)), seq);
      ++checked;
      std::size_t i = seq.size();
      while (i > 0 && seq[i - 1] == n) seq[--i] = 1;
      if (i == 0) break;
      ++seq[i - 1];
    }
    std::size_t expected = 1;
    for (std::size_t k = 0; k + 2 < n; ++k) expected *= n;
    EXPECT_EQ(checked, expected);
  }
}

TEST(PruferTest, RejectsBadSequences) {
  EXPECT_THROW(prufer_decode(4, std::vector<vertex>{1}), tree_error);
  EXPECT_THROW(prufer_decode(4, std::vector<vertex>{1, 5}), tree_error);
}

TEST(EnumerationTest, CayleyCounts) {
  const std::vector<std::size_t> expected{1, 1, 3, 16, 125, 1296};
  for (std::size_t n = 1; n <= 6; ++n) {
    std::size_t count = 0;
    std::set<std::vector<std::pair<vertex, vertex>>> distinct;
    for_each_labeled_tree(n, [&](const free_tree& t) {
      ++count;
      distinct.insert(testing::edge_set(t));
    });
    EXPECT_EQ(count, expected[n - 1]) << "n=" << n;
    EXPECT_EQ(distinct.size(), count) << "n=" << n;
    EXPECT_EQ(labeled_tree_enumerator(n).count(), expected[n - 1]);
  }
}

TEST(EnumerationTest, RejectsOutOfRange) {
  EXPECT_THROW(labeled_tree_enumerator(0), tree_error);
  EXPECT_THROW(labeled_tree_enumerator(10), tree_error);
}

}  // namespace
}  // namespace linarr
