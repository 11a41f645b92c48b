#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "assign/branch_bound.hpp"
#include "assign/brute_force.hpp"
#include "assign/cost_matrix.hpp"
#include "assign/hungarian.hpp"
#include "assign/report.hpp"

namespace assign {

enum class SolverKind { kBrute, kHungarian, kBnbFifo, kBnbLifo, kBnbLeast, kBnbAStar };

// Ordered by name so that iterating this list gives the bench record order.
inline constexpr std::array<SolverKind, 6> kAllSolvers = {
    SolverKind::kBnbAStar, SolverKind::kBnbFifo, SolverKind::kBnbLeast,
    SolverKind::kBnbLifo,  SolverKind::kBrute,   SolverKind::kHungarian};

std::string_view solver_name(SolverKind kind);
std::optional<SolverKind> parse_solver(std::string_view name);
std::optional<Strategy> bnb_strategy(SolverKind kind);

// Largest K the solver accepts by default; nullopt means unbounded.
std::optional<std::size_t> default_cap(SolverKind kind);

struct SolveOptions {
  // Overrides default_cap for brute force and blind branch and bound.
  std::optional<std::size_t> max_size;
};

// Dispatches to the named solver and fills in `elapsed` around the call.
SolveReport solve(SolverKind kind, const CostMatrix& m, const SolveOptions& options = {});

}  // namespace assign
