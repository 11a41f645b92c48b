#include <gtest/gtest.h>

#include <limits>
#include <random>
#include <set>

#include "assign/cost_matrix.hpp"

namespace assign {
namespace {

const CostMatrix kWorked{{9, 8, 7}, {6, 5, 4}, {3, 2, 1}};

TEST(CostMatrixTest, BuildsFromRows) {
  std::vector<std::vector<Cost>> rows = {{9, 8, 7}, {6, 5, 4}, {3, 2, 1}};
  CostMatrix m(rows);
  rows[0][0] = 100;
  EXPECT_EQ(m.size(), 3u);
  EXPECT_EQ(m(0, 0), 9);
  EXPECT_EQ(m(2, 1), 2);
  EXPECT_EQ(m.max_entry(), 9);
}

TEST(CostMatrixTest, SingleCell) {
  CostMatrix m{{5}};
  EXPECT_EQ(m.size(), 1u);
  EXPECT_EQ(m(0, 0), 5);
}

TEST(CostMatrixTest, EmptyIsAllowed) {
  CostMatrix m(std::vector<std::vector<Cost>>{});
  EXPECT_TRUE(m.empty());
}

TEST(CostMatrixTest, RejectsRaggedRows) {
  try {
    CostMatrix m({{1, 2}, {3, 4, 5}});
    FAIL() << "expected NonSquare";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonSquare);
  }
  EXPECT_THROW(CostMatrix({{1, 2, 3}, {4, 5, 6}}), Error);
}

TEST(CostMatrixTest, RejectsNegativeEntries) {
  try {
    CostMatrix m({{1, -2}, {3, 4}});
    FAIL() << "expected NegativeCost";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNegativeCost);
  }
}

TEST(AssignmentCostTest, WorkedExample) {
  EXPECT_EQ(assignment_cost(kWorked, Assignment{{0, 1, 2}}), 15);
  EXPECT_EQ(assignment_cost(kWorked, Assignment{{2, 0, 1}}), 15);
  EXPECT_EQ(assignment_cost(CostMatrix{{0}}, Assignment{{0}}), 0);
  EXPECT_EQ(assignment_cost(CostMatrix{}, Assignment{}), 0);
}

TEST(AssignmentCostTest, Errors) {
  try {
    assignment_cost(kWorked, Assignment{{0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
  try {
    assignment_cost(kWorked, Assignment{{0, 0, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPermutationInvalid);
  }
  const Cost big = std::numeric_limits<Cost>::max();
  try {
    assignment_cost(CostMatrix{{big, big}, {big, big}}, Assignment{{0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOverflow);
  }
}

TEST(ValidateAssignmentTest, Cases) {
  EXPECT_FALSE(validate_assignment(Assignment{{1, 0, 2}}, 3));
  auto dup = validate_assignment(Assignment{{0, 0, 2}}, 3);
  ASSERT_TRUE(dup);
  EXPECT_EQ(dup->kind, AssignmentIssue::Kind::kDuplicate);
  EXPECT_EQ(dup->index, 1u);
  auto len = validate_assignment(Assignment{{0, 1}}, 3);
  ASSERT_TRUE(len);
  EXPECT_EQ(len->kind, AssignmentIssue::Kind::kLength);
  auto range = validate_assignment(Assignment{{0, 3, 1}}, 3);
  ASSERT_TRUE(range);
  EXPECT_EQ(range->kind, AssignmentIssue::Kind::kOutOfRange);
}

TEST(PermutationsTest, ThreeInLexicographicOrder) {
  std::vector<std::vector<std::size_t>> seen;
  for (const Assignment& p : permutations(3)) seen.push_back(p.mapping);
  ASSERT_EQ(seen.size(), 6u);
  EXPECT_EQ(seen.front(), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(seen.back(), (std::vector<std::size_t>{2, 1, 0}));
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
}

TEST(PermutationsTest, SmallCases) {
  std::size_t count = 0;
  for (const Assignment& p : permutations(0)) {
    EXPECT_TRUE(p.mapping.empty());
    ++count;
  }
  EXPECT_EQ(count, 1u);

  count = 0;
  for (const Assignment& p : permutations(1)) {
    EXPECT_EQ(p.mapping, std::vector<std::size_t>{0});
    ++count;
  }
  EXPECT_EQ(count, 1u);
}

TEST(PermutationsTest, CountsAndDistinctUpToSeven) {
  std::size_t factorial = 1;
  for (std::size_t k = 0; k <= 7; ++k) {
    if (k > 0) factorial *= k;
    std::set<std::vector<std::size_t>> seen;
    std::size_t count = 0;
    for (const Assignment& p : permutations(k)) {
      EXPECT_FALSE(validate_assignment(p, k));
      seen.insert(p.mapping);
      ++count;
    }
    EXPECT_EQ(count, factorial) << "k=" << k;
    EXPECT_EQ(seen.size(), factorial) << "k=" << k;
  }
}

TEST(AssignmentCostTest, RowOrderIndependentAndBounded) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 1 + rng() % 7;
    std::vector<std::vector<Cost>> rows(k, std::vector<Cost>(k));
    for (auto& r : rows) {
      for (auto& c : r) c = static_cast<Cost>(rng() % 1000);
    }
    CostMatrix m(rows);
    Assignment a;
    a.mapping.resize(k);
    std::iota(a.mapping.begin(), a.mapping.end(), std::size_t{0});
    std::shuffle(a.mapping.begin(), a.mapping.end(), rng);

    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    Cost shuffled_sum = 0;
    for (std::size_t i : order) shuffled_sum += m(i, a.mapping[i]);

    const Cost cost = assignment_cost(m, a);
    EXPECT_EQ(cost, shuffled_sum);
    EXPECT_GE(cost, 0);
    EXPECT_LE(cost, static_cast<Cost>(k) * m.max_entry());
  }
}

}  // namespace
}  // namespace assign
