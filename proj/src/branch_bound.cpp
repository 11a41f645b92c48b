#include "assign/branch_bound.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>
#include <string>
#include <utility>

namespace assign {

namespace {

std::vector<bool> used_jobs(std::size_t k, const SearchNode& node) {
  std::vector<bool> used(k, false);
  for (std::size_t job : node.partial_mapping) used[job] = true;
  return used;
}

Cost row_minima_bound(const CostMatrix& m, std::size_t depth, const std::vector<bool>& used) {
  Cost total = 0;
  for (std::size_t i = depth; i < m.size(); ++i) {
    Cost best = std::numeric_limits<Cost>::max();
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (!used[j]) best = std::min(best, m(i, j));
    }
    total = checked_add(total, best);
  }
  return total;
}

struct Queued {
  SearchNode node;
  Cost priority;
  std::uint64_t seq;
};

// Lower priority first; ties go to the deeper node, then the lower last job,
// then the earlier generated node.
struct LaterFirst {
  bool operator()(const Queued& a, const Queued& b) const {
    if (a.priority != b.priority) return a.priority > b.priority;
    if (a.node.depth() != b.node.depth()) return a.node.depth() < b.node.depth();
    const std::size_t ja = a.node.partial_mapping.empty() ? 0 : a.node.partial_mapping.back();
    const std::size_t jb = b.node.partial_mapping.empty() ? 0 : b.node.partial_mapping.back();
    if (ja != jb) return ja > jb;
    return a.seq > b.seq;
  }
};

// Frontier with the discipline of one strategy.
class Frontier {
 public:
  explicit Frontier(Strategy strategy) : strategy_(strategy) {}

  bool empty() const {
    switch (strategy_) {
      case Strategy::kFifo: return queue_.empty();
      case Strategy::kLifo: return stack_.empty();
      default: return heap_.empty();
    }
  }

  std::size_t size() const {
    switch (strategy_) {
      case Strategy::kFifo: return queue_.size();
      case Strategy::kLifo: return stack_.size();
      default: return heap_.size();
    }
  }

  // Children arrive in ascending job order.
  void push_children(std::vector<SearchNode> children) {
    switch (strategy_) {
      case Strategy::kFifo:
        for (auto& c : children) queue_.push_back(std::move(c));
        break;
      case Strategy::kLifo:
        for (auto it = children.rbegin(); it != children.rend(); ++it) {
          stack_.push_back(std::move(*it));
        }
        break;
      case Strategy::kLeastCost:
      case Strategy::kAStar:
        for (auto& c : children) {
          const Cost p = strategy_ == Strategy::kAStar ? c.f_bound() : c.g_cost;
          heap_.push(Queued{std::move(c), p, seq_++});
        }
        break;
    }
  }

  SearchNode pop() {
    SearchNode out;
    switch (strategy_) {
      case Strategy::kFifo:
        out = std::move(queue_.front());
        queue_.pop_front();
        break;
      case Strategy::kLifo:
        out = std::move(stack_.back());
        stack_.pop_back();
        break;
      default:
        out = heap_.top().node;
        heap_.pop();
        break;
    }
    return out;
  }

 private:
  Strategy strategy_;
  std::deque<SearchNode> queue_;
  std::vector<SearchNode> stack_;
  std::priority_queue<Queued, std::vector<Queued>, LaterFirst> heap_;
  std::uint64_t seq_ = 0;
};

std::pair<Cost, std::vector<std::size_t>> greedy_assignment(const CostMatrix& m) {
  std::vector<bool> used(m.size(), false);
  std::vector<std::size_t> mapping;
  Cost total = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::size_t pick = 0;
    Cost best = std::numeric_limits<Cost>::max();
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (!used[j] && m(i, j) < best) {
        best = m(i, j);
        pick = j;
      }
    }
    used[pick] = true;
    mapping.push_back(pick);
    total = checked_add(total, best);
  }
  return {total, std::move(mapping)};
}

}  // namespace

SearchNode SearchNode::root(const CostMatrix& m) {
  SearchNode node;
  node.h_bound = lower_bound(m, node);
  return node;
}

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::kFifo: return "fifo";
    case Strategy::kLifo: return "lifo";
    case Strategy::kLeastCost: return "least";
    case Strategy::kAStar: return "astar";
  }
  return "unknown";
}

Cost lower_bound(const CostMatrix& m, const SearchNode& node) {
  return row_minima_bound(m, node.depth(), used_jobs(m.size(), node));
}

std::vector<SearchNode> expand(const CostMatrix& m, const SearchNode& node) {
  const std::size_t k = m.size();
  const std::size_t worker = node.depth();
  if (worker >= k) {
    throw Error(ErrorCode::kExpandComplete, "node already assigns all " + std::to_string(k) +
                                                " workers");
  }
  std::vector<bool> used = used_jobs(k, node);
  std::vector<SearchNode> children;
  children.reserve(k - worker);
  for (std::size_t job = 0; job < k; ++job) {
    if (used[job]) continue;
    SearchNode child;
    child.partial_mapping.reserve(worker + 1);
    child.partial_mapping = node.partial_mapping;
    child.partial_mapping.push_back(job);
    child.g_cost = checked_add(node.g_cost, m(worker, job));
    used[job] = true;
    child.h_bound = row_minima_bound(m, worker + 1, used);
    used[job] = false;
    children.push_back(std::move(child));
  }
  return children;
}

std::optional<std::string> tree_stats_check(const ExploredTreeStats& stats) {
  if (stats.nodes_generated >= 1 && stats.edges_generated == stats.nodes_generated - 1) {
    return std::nullopt;
  }
  return "explored tree has " + std::to_string(stats.nodes_generated) + " nodes but " +
         std::to_string(stats.edges_generated) + " edges";
}

std::uint64_t full_tree_size(std::size_t k) {
  std::uint64_t total = 1;
  std::uint64_t level = 1;
  for (std::size_t d = 0; d < k; ++d) {
    level *= (k - d);
    total += level;
  }
  return total;
}

BranchBoundResult solve_bnb_detailed(const CostMatrix& m, Strategy strategy,
                                     const BranchBoundOptions& options) {
  const std::size_t k = m.size();
  if ((strategy == Strategy::kFifo || strategy == Strategy::kLifo) &&
      k > options.blind_max_size) {
    throw Error(ErrorCode::kInstanceTooLarge,
                std::string(strategy_name(strategy)) + " branch and bound is capped at K = " +
                    std::to_string(options.blind_max_size) + ", got K = " + std::to_string(k));
  }

  BranchBoundResult result;
  ExploredTreeStats& stats = result.stats;
  Cost incumbent = std::numeric_limits<Cost>::max();
  bool have_incumbent = false;
  std::vector<std::size_t> best;
  if (options.greedy_warm_start) {
    auto [cost, mapping] = greedy_assignment(m);
    incumbent = cost;
    best = std::move(mapping);
    have_incumbent = true;
  }

  auto prune = [&](const SearchNode& node) {
    if (options.on_prune) options.on_prune(node);
  };
  // Returns true when the node should stay on the frontier.
  auto admit = [&](const SearchNode& node) {
    if (options.on_generate) options.on_generate(node);
    if (node.depth() == k) {
      if (!have_incumbent || node.g_cost < incumbent) {
        incumbent = node.g_cost;
        best = node.partial_mapping;
        have_incumbent = true;
      } else {
        prune(node);
      }
      return false;
    }
    if (have_incumbent && node.f_bound() >= incumbent) {
      prune(node);
      return false;
    }
    return true;
  };

  Frontier frontier(strategy);
  SearchNode root = SearchNode::root(m);
  stats.nodes_generated = 1;
  if (admit(root)) {
    std::vector<SearchNode> start;
    start.push_back(std::move(root));
    frontier.push_children(std::move(start));
    stats.max_frontier = 1;
  }

  while (!frontier.empty()) {
    SearchNode node = frontier.pop();
    if (have_incumbent && node.f_bound() >= incumbent) {
      prune(node);
      continue;
    }
    std::vector<SearchNode> children = expand(m, node);
    ++stats.nodes_expanded;
    stats.nodes_generated += children.size();
    stats.edges_generated += children.size();
    std::vector<SearchNode> kept;
    kept.reserve(children.size());
    for (auto& child : children) {
      if (admit(child)) kept.push_back(std::move(child));
    }
    frontier.push_children(std::move(kept));
    stats.max_frontier = std::max<std::uint64_t>(stats.max_frontier, frontier.size());
  }

  result.report.optimal_cost = incumbent;
  result.report.assignment = Assignment{std::move(best)};
  result.report.nodes_expanded = stats.nodes_expanded;
  result.report.edges_generated = stats.edges_generated;
  return result;
}

}  // namespace assign
