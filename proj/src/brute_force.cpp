#include "assign/brute_force.hpp"

#include <limits>
#include <string>

namespace assign {

SolveReport solve_brute_force(const CostMatrix& m, const BruteForceOptions& options) {
  const std::size_t k = m.size();
  if (k > options.max_size) {
    throw Error(ErrorCode::kInstanceTooLarge,
                "brute force is capped at K = " + std::to_string(options.max_size) +
                    ", got K = " + std::to_string(k));
  }

  SolveReport report;
  Cost best = std::numeric_limits<Cost>::max();
  bool found = false;
  for (const Assignment& candidate : permutations(k)) {
    ++report.nodes_expanded;
    Cost total = 0;
    for (std::size_t i = 0; i < k; ++i) total = checked_add(total, m(i, candidate.mapping[i]));
    if (!found || total < best) {
      best = total;
      report.assignment = candidate;
      found = true;
    }
  }
  report.optimal_cost = best;
  return report;
}

}  // namespace assign
