#include <gtest/gtest.h>

#include <random>

#include "assign/branch_bound.hpp"
#include "oracle.hpp"

namespace assign {
namespace {

const CostMatrix kWorked{{9, 8, 7}, {6, 5, 4}, {3, 2, 1}};
const CostMatrix kSmall3{{4, 1, 3}, {2, 0, 5}, {3, 2, 2}};
constexpr Strategy kStrategies[] = {Strategy::kFifo, Strategy::kLifo, Strategy::kLeastCost,
                                    Strategy::kAStar};

SearchNode node_with(const CostMatrix& m, std::vector<std::size_t> mapping) {
  SearchNode n;
  n.partial_mapping = std::move(mapping);
  for (std::size_t i = 0; i < n.depth(); ++i) n.g_cost += m(i, n.partial_mapping[i]);
  n.h_bound = lower_bound(m, n);
  return n;
}

TEST(LowerBoundTest, Examples) {
  EXPECT_EQ(lower_bound(kWorked, SearchNode{}), 12);
  EXPECT_EQ(lower_bound(kWorked, node_with(kWorked, {0})), 5);
  EXPECT_EQ(lower_bound(kWorked, node_with(kWorked, {2, 0, 1})), 0);
  EXPECT_EQ(SearchNode::root(kWorked).h_bound, 12);
}

TEST(ExpandTest, RootChildren) {
  const auto children = expand(kWorked, SearchNode::root(kWorked));
  ASSERT_EQ(children.size(), 3u);
  EXPECT_EQ(children[0].g_cost, 9);
  EXPECT_EQ(children[1].g_cost, 8);
  EXPECT_EQ(children[2].g_cost, 7);
  for (std::size_t j = 0; j < 3; ++j) {
    EXPECT_EQ(children[j].partial_mapping, std::vector<std::size_t>{j});
    EXPECT_EQ(children[j].h_bound, lower_bound(kWorked, children[j]));
  }
}

TEST(ExpandTest, LastLevelHasOneCompleteChild) {
  const auto children = expand(kWorked, node_with(kWorked, {1, 2}));
  ASSERT_EQ(children.size(), 1u);
  EXPECT_EQ(children[0].partial_mapping, (std::vector<std::size_t>{1, 2, 0}));
  EXPECT_EQ(children[0].g_cost, 8 + 4 + 3);
  EXPECT_EQ(children[0].h_bound, 0);
}

TEST(ExpandTest, CompleteNodeThrows) {
  try {
    expand(kWorked, node_with(kWorked, {0, 1, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kExpandComplete);
  }
}

std::uint64_t walk(const CostMatrix& m, const SearchNode& node) {
  if (node.depth() == m.size()) return 1;
  auto children = expand(m, node);
  EXPECT_EQ(children.size(), m.size() - node.depth());
  std::uint64_t total = 1;
  for (const auto& c : children) total += walk(m, c);
  return total;
}

TEST(ExpandTest, FullTreeSizes) {
  EXPECT_EQ(walk(kWorked, SearchNode::root(kWorked)), 16u);
  EXPECT_EQ(full_tree_size(3), 16u);
  for (std::size_t k = 0; k <= 7; ++k) EXPECT_EQ(full_tree_size(k), oracle::count_tree(k));
}

TEST(TreeStatsCheckTest, Cases) {
  EXPECT_FALSE(tree_stats_check({.nodes_generated = 16, .edges_generated = 15}));
  EXPECT_FALSE(tree_stats_check({.nodes_generated = 1, .edges_generated = 0}));
  EXPECT_TRUE(tree_stats_check({.nodes_generated = 40, .edges_generated = 40}));
  EXPECT_TRUE(tree_stats_check({.nodes_generated = 0, .edges_generated = 0}));
}

TEST(SolveBnbTest, WorkedExampleAllStrategies) {
  for (Strategy s : kStrategies) {
    const auto r = solve_bnb_detailed(kWorked, s);
    EXPECT_EQ(r.report.optimal_cost, 15) << strategy_name(s);
    EXPECT_EQ(assignment_cost(kWorked, r.report.assignment), 15);
    EXPECT_FALSE(tree_stats_check(r.stats));
  }
}

TEST(SolveBnbTest, SingleCell) {
  for (Strategy s : kStrategies) {
    const auto r = solve_bnb(CostMatrix{{6}}, s);
    EXPECT_EQ(r.optimal_cost, 6);
    EXPECT_EQ(r.assignment.mapping, std::vector<std::size_t>{0});
    EXPECT_LE(r.nodes_expanded, 2u);
  }
}

TEST(SolveBnbTest, EmptyMatrix) {
  for (Strategy s : kStrategies) {
    const auto r = solve_bnb_detailed(CostMatrix{}, s);
    EXPECT_EQ(r.report.optimal_cost, 0);
    EXPECT_TRUE(r.report.assignment.mapping.empty());
    EXPECT_EQ(r.stats.nodes_generated, 1u);
    EXPECT_EQ(r.stats.edges_generated, 0u);
  }
}

TEST(SolveBnbTest, SecondExampleStrategyOrdering) {
  std::uint64_t expanded[4];
  for (int i = 0; i < 4; ++i) {
    const auto r = solve_bnb(kSmall3, kStrategies[i]);
    EXPECT_EQ(r.optimal_cost, 5);
    expanded[i] = r.nodes_expanded;
  }
  const auto fifo = expanded[0], least = expanded[2], astar = expanded[3];
  EXPECT_LE(astar, least);
  EXPECT_LE(least, fifo);
}

TEST(SolveBnbTest, BlindStrategiesAreCapped) {
  std::vector<std::vector<Cost>> rows(13, std::vector<Cost>(13, 1));
  const CostMatrix m(rows);
  for (Strategy s : {Strategy::kFifo, Strategy::kLifo}) {
    try {
      solve_bnb(m, s);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInstanceTooLarge);
    }
  }
  EXPECT_EQ(solve_bnb(m, Strategy::kAStar).optimal_cost, 13);

  const CostMatrix five(std::vector<std::vector<Cost>>(5, std::vector<Cost>(5, 2)));
  EXPECT_THROW(solve_bnb(five, Strategy::kLifo, {.blind_max_size = 4}), Error);
  EXPECT_EQ(solve_bnb(five, Strategy::kFifo, {.blind_max_size = 5}).optimal_cost, 10);
}

TEST(SolveBnbTest, GreedyWarmStartKeepsOptimum) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const CostMatrix m = oracle::random_matrix(rng, 1 + trial % 6, 30);
    const Cost expected = oracle::solve(m).cost;
    for (Strategy s : kStrategies) {
      const auto warm = solve_bnb_detailed(m, s, {.greedy_warm_start = true});
      EXPECT_EQ(warm.report.optimal_cost, expected);
      EXPECT_EQ(assignment_cost(m, warm.report.assignment), expected);
      EXPECT_LE(warm.stats.nodes_expanded, solve_bnb_detailed(m, s).stats.nodes_expanded);
    }
  }
}

TEST(SolveBnbTest, OptimalAndTreeInvariantOnRandomInstances) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 350; ++trial) {
    const std::size_t k = 1 + trial % 7;
    const CostMatrix m = oracle::random_matrix(rng, k, trial % 2 ? 99 : 4);
    const Cost expected = oracle::solve(m).cost;
    for (Strategy s : kStrategies) {
      const auto r = solve_bnb_detailed(m, s);
      ASSERT_EQ(r.report.optimal_cost, expected) << strategy_name(s) << " trial " << trial;
      EXPECT_EQ(assignment_cost(m, r.report.assignment), expected);
      EXPECT_FALSE(tree_stats_check(r.stats));
      EXPECT_LE(r.stats.nodes_generated, full_tree_size(k));
      EXPECT_GE(r.stats.max_frontier, 1u);
      const auto again = solve_bnb_detailed(m, s);
      EXPECT_TRUE(same_result(r.report, again.report));
      EXPECT_EQ(r.stats, again.stats);
    }
  }
}

TEST(SolveBnbTest, BoundIsAdmissibleAndConsistent) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t k = 1 + trial % 5;
    const CostMatrix m = oracle::random_matrix(rng, k, 20);
    // Exhaustive walk of the valid tree.
    std::vector<SearchNode> stack{SearchNode::root(m)};
    while (!stack.empty()) {
      SearchNode node = std::move(stack.back());
      stack.pop_back();
      EXPECT_LE(node.f_bound(), oracle::best_completion(m, node.partial_mapping).cost);
      if (node.depth() == k) continue;
      for (auto& child : expand(m, node)) {
        EXPECT_GE(child.f_bound(), node.f_bound());
        stack.push_back(std::move(child));
      }
    }
  }
}

TEST(SolveBnbTest, PrunedSubtreesHoldNothingBetter) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t k = 1 + trial % 5;
    const CostMatrix m = oracle::random_matrix(rng, k, 15);
    for (Strategy s : kStrategies) {
      std::vector<SearchNode> pruned;
      BranchBoundOptions options;
      options.on_prune = [&](const SearchNode& n) { pruned.push_back(n); };
      const auto r = solve_bnb(m, s, options);
      for (const auto& n : pruned) {
        EXPECT_GE(oracle::best_completion(m, n.partial_mapping).cost, r.optimal_cost);
      }
    }
  }
}

TEST(SolveBnbTest, GeneratedObserverMatchesStats) {
  std::mt19937_64 rng(47);
  const CostMatrix m = oracle::random_matrix(rng, 6, 50);
  for (Strategy s : kStrategies) {
    std::uint64_t seen = 0;
    BranchBoundOptions options;
    options.on_generate = [&](const SearchNode&) { ++seen; };
    const auto r = solve_bnb_detailed(m, s, options);
    EXPECT_EQ(seen, r.stats.nodes_generated);
  }
}

}  // namespace
}  // namespace assign
