#pragma once

// Test-only reference computations. Nothing here calls into the solvers or
// the permutation stream, so these stay independent of the code under test.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "assign/cost_matrix.hpp"

namespace assign::oracle {

struct Best {
  Cost cost = std::numeric_limits<Cost>::max();
  std::vector<std::size_t> mapping;
};

// Depth-first enumeration of every completion of `prefix`; jobs are tried in
// ascending order so the first strict improvement is the lexicographic
// minimizer.
inline void enumerate(const CostMatrix& m, std::vector<std::size_t>& prefix,
                      std::vector<bool>& used, Cost so_far, Best& best) {
  const std::size_t k = m.size();
  if (prefix.size() == k) {
    if (so_far < best.cost) {
      best.cost = so_far;
      best.mapping = prefix;
    }
    return;
  }
  const std::size_t worker = prefix.size();
  for (std::size_t j = 0; j < k; ++j) {
    if (used[j]) continue;
    used[j] = true;
    prefix.push_back(j);
    enumerate(m, prefix, used, so_far + m(worker, j), best);
    prefix.pop_back();
    used[j] = false;
  }
}

inline Best best_completion(const CostMatrix& m, std::vector<std::size_t> prefix) {
  std::vector<bool> used(m.size(), false);
  Cost g = 0;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    used[prefix[i]] = true;
    g += m(i, prefix[i]);
  }
  Best best;
  enumerate(m, prefix, used, g, best);
  return best;
}

inline Best solve(const CostMatrix& m) { return best_completion(m, {}); }

// Counts valid partial assignments by walking the whole tree.
inline std::uint64_t count_tree(std::size_t k, std::size_t depth = 0) {
  std::uint64_t total = 1;
  for (std::size_t j = depth; j < k; ++j) total += count_tree(k, depth + 1);
  return total;
}

inline CostMatrix random_matrix(std::mt19937_64& rng, std::size_t k, Cost hi) {
  std::uniform_int_distribution<Cost> dist(0, hi);
  std::vector<std::vector<Cost>> rows(k, std::vector<Cost>(k));
  for (auto& row : rows) {
    for (auto& c : row) c = dist(rng);
  }
  return CostMatrix(rows);
}

}  // namespace assign::oracle
