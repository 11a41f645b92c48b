#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "assign/cost_matrix.hpp"
#include "assign/report.hpp"

namespace assign {

// A partial assignment: workers 0..depth-1 hold partial_mapping[0..depth-1].
struct SearchNode {
  std::vector<std::size_t> partial_mapping;
  Cost g_cost = 0;
  Cost h_bound = 0;

  std::size_t depth() const noexcept { return partial_mapping.size(); }
  Cost f_bound() const { return checked_add(g_cost, h_bound); }

  static SearchNode root(const CostMatrix& m);
};

enum class Strategy { kFifo, kLifo, kLeastCost, kAStar };

std::string_view strategy_name(Strategy s);

struct ExploredTreeStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t nodes_generated = 0;
  std::uint64_t edges_generated = 0;
  std::uint64_t max_frontier = 0;

  friend bool operator==(const ExploredTreeStats&, const ExploredTreeStats&) = default;
};

// Sum over unassigned workers of their cheapest still-free job. Never exceeds
// the cheapest completion of `node`; 0 for a complete node.
Cost lower_bound(const CostMatrix& m, const SearchNode& node);

// Children assign worker depth() to each free job in ascending job order.
// Throws kExpandComplete when the node is already complete.
std::vector<SearchNode> expand(const CostMatrix& m, const SearchNode& node);

// Empty optional iff edges_generated = nodes_generated - 1.
std::optional<std::string> tree_stats_check(const ExploredTreeStats& stats);

struct BranchBoundOptions {
  // FIFO and LIFO refuse instances above this size with kInstanceTooLarge.
  std::size_t blind_max_size = 12;
  // Seeds the incumbent with the greedy cheapest-free-job assignment.
  bool greedy_warm_start = false;
  // Observers for audits. on_generate sees every node created, including the
  // root; on_prune sees every node discarded by the bound.
  std::function<void(const SearchNode&)> on_generate;
  std::function<void(const SearchNode&)> on_prune;
};

struct BranchBoundResult {
  SolveReport report;
  ExploredTreeStats stats;
};

BranchBoundResult solve_bnb_detailed(const CostMatrix& m, Strategy strategy,
                                     const BranchBoundOptions& options = {});

inline SolveReport solve_bnb(const CostMatrix& m, Strategy strategy,
                             const BranchBoundOptions& options = {}) {
  return solve_bnb_detailed(m, strategy, options).report;
}

// Number of valid partial assignments: sum over d of K!/(K-d)!.
std::uint64_t full_tree_size(std::size_t k);

}  // namespace assign
