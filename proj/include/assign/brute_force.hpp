#pragma once

#include <cstddef>

#include "assign/cost_matrix.hpp"
#include "assign/report.hpp"

namespace assign {

struct BruteForceOptions {
  // Instances with K above this throw kInstanceTooLarge.
  std::size_t max_size = 12;
};

// Exhaustive search over every permutation in lexicographic order. The first
// minimizer wins ties. nodes_expanded = K!.
SolveReport solve_brute_force(const CostMatrix& m, const BruteForceOptions& options = {});

}  // namespace assign
