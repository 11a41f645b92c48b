#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "assign/cost_matrix.hpp"
#include "assign/report.hpp"

namespace assign {

// Reduced matrix together with the potentials that produced it. For every
// cell, reduced(i, j) = original(i, j) - row_potentials[i] - col_potentials[j]
// and stays non-negative.
struct ReducedState {
  SquareGrid reduced;
  std::vector<Cost> row_potentials;
  std::vector<Cost> col_potentials;
  std::uint64_t iteration_count = 0;

  static ReducedState from(const CostMatrix& m);
};

// Minimum set of rows and columns covering every zero. Both lists are sorted
// ascending.
struct LineCover {
  std::vector<std::size_t> covered_rows;
  std::vector<std::size_t> covered_cols;

  std::size_t size() const noexcept { return covered_rows.size() + covered_cols.size(); }
  friend bool operator==(const LineCover&, const LineCover&) = default;
};

// Subtracts each row minimum and adds it to that row's potential.
ReducedState reduce_rows(ReducedState state);

// Subtracts each column minimum and adds it to that column's potential.
ReducedState reduce_cols(ReducedState state);

// Size of a maximum matching on the zero cells of `reduced`. Augmenting paths
// are searched rows ascending, columns ascending.
std::size_t max_zero_matching(const SquareGrid& reduced);

// König construction from a maximum zero matching: the cover is the rows not
// reachable by alternating paths from unmatched rows, plus the columns that
// are reachable. Its size equals the maximum matching size.
LineCover min_line_cover(const SquareGrid& reduced);

// Lets delta be the smallest uncovered entry. Uncovered rows gain delta in
// their potential (their entries drop by delta) and covered columns lose
// delta (their entries rise by delta), so doubly covered cells rise by delta.
// Throws kNoUncoveredCell when the cover leaves nothing uncovered.
ReducedState adjust_uncovered(ReducedState state, const LineCover& cover);

struct HungarianOptions {
  // Re-derives the line cover from scratch at every adjust step and checks
  // its minimality, non-negativity of the reduced matrix and the strict growth
  // of the potential sum. Throws std::logic_error on a breach. Costs O(K^3)
  // per step, so it is meant for tests.
  bool audit = false;
};

// Kuhn-Munkres: row reduction, column reduction, then alternating cover and
// adjust steps until K lines are needed. The cover is maintained
// incrementally from the zero matching of the previous step (matched zeros
// survive an adjust). The returned assignment is the lexicographically
// smallest perfect matching on the final zero cells, and the certificate
// holds the accumulated potentials. nodes_expanded counts adjust steps.
SolveReport solve_hungarian(const CostMatrix& m, const HungarianOptions& options = {});

}  // namespace assign
