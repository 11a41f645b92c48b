#include "assign/hungarian.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace assign {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

Cost potential_sum(const std::vector<Cost>& u, const std::vector<Cost>& v) {
  Cost total = 0;
  for (Cost x : u) total = checked_add(total, x);
  for (Cost x : v) total = checked_add(total, x);
  return total;
}

// Maximum matching on zero cells by augmenting paths. Rows are tried in
// ascending order and each row scans its columns ascending.
struct ZeroMatching {
  std::vector<std::size_t> row_match;
  std::vector<std::size_t> col_match;
  std::size_t size = 0;
};

bool try_augment(const SquareGrid& g, std::size_t row, std::vector<bool>& seen,
                 ZeroMatching& mm) {
  for (std::size_t col = 0; col < g.size(); ++col) {
    if (g(row, col) != 0 || seen[col]) continue;
    seen[col] = true;
    if (mm.col_match[col] == kNone || try_augment(g, mm.col_match[col], seen, mm)) {
      mm.row_match[row] = col;
      mm.col_match[col] = row;
      return true;
    }
  }
  return false;
}

ZeroMatching zero_matching(const SquareGrid& g) {
  const std::size_t k = g.size();
  ZeroMatching mm{std::vector<std::size_t>(k, kNone), std::vector<std::size_t>(k, kNone), 0};
  for (std::size_t row = 0; row < k; ++row) {
    std::vector<bool> seen(k, false);
    if (try_augment(g, row, seen, mm)) ++mm.size;
  }
  return mm;
}

// Working state of solve_hungarian. Reduced costs are derived on demand from
// the original matrix and the potentials.
class Solver {
 public:
  Solver(const CostMatrix& m, const HungarianOptions& options)
      : m_(m),
        options_(options),
        k_(m.size()),
        row_match_(k_, kNone),
        col_match_(k_, kNone) {}

  SolveReport run() {
    ReducedState state = reduce_cols(reduce_rows(ReducedState::from(m_)));
    u_ = std::move(state.row_potentials);
    v_ = std::move(state.col_potentials);

    greedy_matching();
    while (matched_ < k_) grow_and_augment();

    SolveReport report;
    report.assignment = lexicographic_matching();
    report.optimal_cost = assignment_cost(m_, report.assignment);
    report.nodes_expanded = adjust_steps_;
    report.certificate = DualCertificate{u_, v_};
    if (potential_sum(u_, v_) != report.optimal_cost) {
      throw std::logic_error("hungarian: potentials do not sum to the optimal cost");
    }
    return report;
  }

 private:
  Cost reduced(std::size_t i, std::size_t j) const {
    return checked_sub(checked_sub(m_(i, j), u_[i]), v_[j]);
  }

  void greedy_matching() {
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = 0; j < k_; ++j) {
        if (col_match_[j] == kNone && reduced(i, j) == 0) {
          row_match_[i] = j;
          col_match_[j] = i;
          ++matched_;
          break;
        }
      }
    }
  }

  void add_row(std::size_t i) {
    in_z_row_[i] = true;
    z_rows_.push_back(i);
    for (std::size_t j = 0; j < k_; ++j) {
      if (in_z_col_[j]) continue;
      const Cost r = reduced(i, j);
      if (r < slack_[j]) {
        slack_[j] = r;
        slack_row_[j] = i;
      }
    }
  }

  // One phase: grows the alternating forest rooted at every free row, runs
  // adjust steps whenever the forest is closed, and finishes with one
  // augmentation. The forest at a closed point is exactly the König
  // construction, so rows outside it and columns inside it form a minimum
  // line cover.
  void grow_and_augment() {
    in_z_row_.assign(k_, false);
    in_z_col_.assign(k_, false);
    slack_.assign(k_, std::numeric_limits<Cost>::max());
    slack_row_.assign(k_, kNone);
    col_parent_.assign(k_, kNone);
    z_rows_.clear();
    z_cols_.clear();
    for (std::size_t i = 0; i < k_; ++i) {
      if (row_match_[i] == kNone) add_row(i);
    }

    while (true) {
      std::size_t col = kNone;
      for (std::size_t j = 0; j < k_; ++j) {
        if (!in_z_col_[j] && slack_[j] == 0) {
          col = j;
          break;
        }
      }
      if (col == kNone) {
        adjust();
        continue;
      }
      in_z_col_[col] = true;
      z_cols_.push_back(col);
      col_parent_[col] = slack_row_[col];
      if (col_match_[col] == kNone) {
        augment(col);
        return;
      }
      add_row(col_match_[col]);
    }
  }

  void adjust() {
    Cost delta = std::numeric_limits<Cost>::max();
    for (std::size_t j = 0; j < k_; ++j) {
      if (!in_z_col_[j]) delta = std::min(delta, slack_[j]);
    }
    if (options_.audit) audit_before_adjust(delta);
    const Cost before = options_.audit ? potential_sum(u_, v_) : 0;

    for (std::size_t i : z_rows_) u_[i] = checked_add(u_[i], delta);
    for (std::size_t j : z_cols_) v_[j] = checked_sub(v_[j], delta);
    for (std::size_t j = 0; j < k_; ++j) {
      if (!in_z_col_[j]) slack_[j] -= delta;
    }
    ++adjust_steps_;

    if (options_.audit) {
      const Cost after = potential_sum(u_, v_);
      const auto uncovered_rows = static_cast<Cost>(z_rows_.size());
      const auto covered_cols = static_cast<Cost>(z_cols_.size());
      if (after - before != delta * (uncovered_rows - covered_cols) || after <= before) {
        throw std::logic_error("hungarian audit: potential sum did not grow by delta * (K - lines)");
      }
      audit_reduced_non_negative();
    }
  }

  void augment(std::size_t col) {
    while (col != kNone) {
      const std::size_t row = col_parent_[col];
      const std::size_t previous = row_match_[row];
      row_match_[row] = col;
      col_match_[col] = row;
      col = previous;
    }
    ++matched_;
  }

  SquareGrid materialize() const {
    SquareGrid g(k_);
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = 0; j < k_; ++j) g(i, j) = reduced(i, j);
    }
    return g;
  }

  void audit_reduced_non_negative() const {
    const SquareGrid g = materialize();
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = 0; j < k_; ++j) {
        if (g(i, j) < 0) throw std::logic_error("hungarian audit: negative reduced cost");
      }
    }
  }

  void audit_before_adjust(Cost delta) const {
    const SquareGrid g = materialize();
    std::size_t lines = 0;
    for (std::size_t i = 0; i < k_; ++i) {
      if (!in_z_row_[i]) ++lines;
      for (std::size_t j = 0; j < k_; ++j) {
        if (g(i, j) < 0) throw std::logic_error("hungarian audit: negative reduced cost");
        const bool covered = !in_z_row_[i] || in_z_col_[j];
        if (g(i, j) == 0 && !covered) throw std::logic_error("hungarian audit: zero left uncovered");
        if (!covered && g(i, j) < delta) throw std::logic_error("hungarian audit: delta is not minimal");
      }
    }
    lines += z_cols_.size();
    if (lines != max_zero_matching(g) || lines != min_line_cover(g).size()) {
      throw std::logic_error("hungarian audit: line cover is not minimum");
    }
    if (lines >= k_) throw std::logic_error("hungarian audit: adjust reached with K lines");
  }

  // Lexicographically smallest perfect matching on the final zero cells,
  // starting from any perfect matching. Worker i takes the smallest free zero
  // column j whose current owner can hand its column along an alternating
  // cycle back to i; the cycle is then rotated.
  Assignment lexicographic_matching() {
    std::vector<std::vector<std::size_t>> row_zeros(k_);
    std::vector<std::vector<std::size_t>> col_zeros(k_);
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = 0; j < k_; ++j) {
        if (reduced(i, j) == 0) {
          row_zeros[i].push_back(j);
          col_zeros[j].push_back(i);
        }
      }
    }

    std::vector<bool> fixed_row(k_, false);
    std::vector<bool> fixed_col(k_, false);
    std::vector<bool> reach(k_, false);
    std::vector<std::size_t> next(k_, kNone);
    std::vector<std::size_t> queue;
    std::vector<std::size_t> cycle;
    for (std::size_t i = 0; i < k_; ++i) {
      std::size_t first_free = kNone;
      for (std::size_t j : row_zeros[i]) {
        if (!fixed_col[j]) {
          first_free = j;
          break;
        }
      }
      if (first_free != row_match_[i]) {
        // Reverse search: a reaches i when a can take the column of some b
        // that already reaches i.
        std::fill(reach.begin(), reach.end(), false);
        queue.assign(1, i);
        reach[i] = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
          const std::size_t b = queue[head];
          for (std::size_t a : col_zeros[row_match_[b]]) {
            if (fixed_row[a] || reach[a]) continue;
            reach[a] = true;
            next[a] = b;
            queue.push_back(a);
          }
        }
        for (std::size_t j : row_zeros[i]) {
          if (fixed_col[j] || !reach[col_match_[j]]) continue;
          cycle.clear();
          for (std::size_t a = col_match_[j]; a != i; a = next[a]) cycle.push_back(a);
          std::vector<std::size_t> taken(cycle.size());
          for (std::size_t t = 0; t < cycle.size(); ++t) taken[t] = row_match_[next[cycle[t]]];
          for (std::size_t t = 0; t < cycle.size(); ++t) {
            row_match_[cycle[t]] = taken[t];
            col_match_[taken[t]] = cycle[t];
          }
          row_match_[i] = j;
          col_match_[j] = i;
          break;
        }
      }
      fixed_row[i] = true;
      fixed_col[row_match_[i]] = true;
    }
    return Assignment{row_match_};
  }

  const CostMatrix& m_;
  HungarianOptions options_;
  std::size_t k_;
  std::vector<Cost> u_;
  std::vector<Cost> v_;
  std::vector<std::size_t> row_match_;
  std::vector<std::size_t> col_match_;
  std::size_t matched_ = 0;
  std::uint64_t adjust_steps_ = 0;

  std::vector<bool> in_z_row_;
  std::vector<bool> in_z_col_;
  std::vector<Cost> slack_;
  std::vector<std::size_t> slack_row_;
  std::vector<std::size_t> col_parent_;
  std::vector<std::size_t> z_rows_;
  std::vector<std::size_t> z_cols_;
};

}  // namespace

ReducedState ReducedState::from(const CostMatrix& m) {
  return ReducedState{m.grid(), std::vector<Cost>(m.size(), 0),
                      std::vector<Cost>(m.size(), 0), 0};
}

ReducedState reduce_rows(ReducedState state) {
  const std::size_t k = state.reduced.size();
  for (std::size_t i = 0; i < k; ++i) {
    auto row = state.reduced.row(i);
    const Cost low = *std::min_element(row.begin(), row.end());
    for (Cost& c : row) c -= low;
    state.row_potentials[i] = checked_add(state.row_potentials[i], low);
  }
  return state;
}

ReducedState reduce_cols(ReducedState state) {
  const std::size_t k = state.reduced.size();
  for (std::size_t j = 0; j < k; ++j) {
    Cost low = std::numeric_limits<Cost>::max();
    for (std::size_t i = 0; i < k; ++i) low = std::min(low, state.reduced(i, j));
    for (std::size_t i = 0; i < k; ++i) state.reduced(i, j) -= low;
    state.col_potentials[j] = checked_add(state.col_potentials[j], low);
  }
  return state;
}

std::size_t max_zero_matching(const SquareGrid& reduced) {
  return zero_matching(reduced).size;
}

LineCover min_line_cover(const SquareGrid& reduced) {
  const std::size_t k = reduced.size();
  const ZeroMatching mm = zero_matching(reduced);

  std::vector<bool> z_row(k, false);
  std::vector<bool> z_col(k, false);
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < k; ++i) {
    if (mm.row_match[i] == kNone) {
      z_row[i] = true;
      queue.push_back(i);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t i = queue[head];
    for (std::size_t j = 0; j < k; ++j) {
      if (reduced(i, j) != 0 || z_col[j]) continue;
      z_col[j] = true;
      const std::size_t owner = mm.col_match[j];
      if (owner != kNone && !z_row[owner]) {
        z_row[owner] = true;
        queue.push_back(owner);
      }
    }
  }

  LineCover cover;
  for (std::size_t i = 0; i < k; ++i) {
    if (!z_row[i]) cover.covered_rows.push_back(i);
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (z_col[j]) cover.covered_cols.push_back(j);
  }
  return cover;
}

ReducedState adjust_uncovered(ReducedState state, const LineCover& cover) {
  const std::size_t k = state.reduced.size();
  std::vector<bool> row_covered(k, false);
  std::vector<bool> col_covered(k, false);
  for (std::size_t i : cover.covered_rows) row_covered.at(i) = true;
  for (std::size_t j : cover.covered_cols) col_covered.at(j) = true;

  Cost delta = std::numeric_limits<Cost>::max();
  bool any = false;
  for (std::size_t i = 0; i < k; ++i) {
    if (row_covered[i]) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (col_covered[j]) continue;
      delta = std::min(delta, state.reduced(i, j));
      any = true;
    }
  }
  if (!any || cover.size() >= k) {
    throw Error(ErrorCode::kNoUncoveredCell,
                "cover uses " + std::to_string(cover.size()) + " lines for K = " +
                    std::to_string(k));
  }

  for (std::size_t i = 0; i < k; ++i) {
    if (row_covered[i]) continue;
    state.row_potentials[i] = checked_add(state.row_potentials[i], delta);
    for (Cost& c : state.reduced.row(i)) c -= delta;
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (!col_covered[j]) continue;
    state.col_potentials[j] = checked_sub(state.col_potentials[j], delta);
    for (std::size_t i = 0; i < k; ++i) state.reduced(i, j) += delta;
  }
  ++state.iteration_count;
  return state;
}

SolveReport solve_hungarian(const CostMatrix& m, const HungarianOptions& options) {
  return Solver(m, options).run();
}

}  // namespace assign
