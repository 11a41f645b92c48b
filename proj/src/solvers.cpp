#include "assign/solvers.hpp"

#include <chrono>

namespace assign {

std::string_view solver_name(SolverKind kind) {
  switch (kind) {
    case SolverKind::kBrute: return "brute";
    case SolverKind::kHungarian: return "hungarian";
    case SolverKind::kBnbFifo: return "bnb_fifo";
    case SolverKind::kBnbLifo: return "bnb_lifo";
    case SolverKind::kBnbLeast: return "bnb_least";
    case SolverKind::kBnbAStar: return "bnb_astar";
  }
  return "unknown";
}

std::optional<SolverKind> parse_solver(std::string_view name) {
  for (SolverKind kind : kAllSolvers) {
    if (solver_name(kind) == name) return kind;
  }
  return std::nullopt;
}

std::optional<Strategy> bnb_strategy(SolverKind kind) {
  switch (kind) {
    case SolverKind::kBnbFifo: return Strategy::kFifo;
    case SolverKind::kBnbLifo: return Strategy::kLifo;
    case SolverKind::kBnbLeast: return Strategy::kLeastCost;
    case SolverKind::kBnbAStar: return Strategy::kAStar;
    default: return std::nullopt;
  }
}

std::optional<std::size_t> default_cap(SolverKind kind) {
  switch (kind) {
    case SolverKind::kBrute:
      return BruteForceOptions{}.max_size;
    case SolverKind::kBnbFifo:
    case SolverKind::kBnbLifo:
      return BranchBoundOptions{}.blind_max_size;
    default:
      return std::nullopt;
  }
}

SolveReport solve(SolverKind kind, const CostMatrix& m, const SolveOptions& options) {
  using Clock = std::chrono::steady_clock;
  SolveReport report;
  Clock::time_point start;
  if (kind == SolverKind::kBrute) {
    BruteForceOptions brute;
    if (options.max_size) brute.max_size = *options.max_size;
    start = Clock::now();
    report = solve_brute_force(m, brute);
  } else if (kind == SolverKind::kHungarian) {
    start = Clock::now();
    report = solve_hungarian(m);
  } else {
    BranchBoundOptions bnb;
    if (options.max_size) bnb.blind_max_size = *options.max_size;
    start = Clock::now();
    report = solve_bnb(m, *bnb_strategy(kind), bnb);
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return report;
}

}  // namespace assign
