#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "assign/cost_matrix.hpp"

namespace assign {

// Dual potentials proving optimality: u_i + v_j <= c_ij everywhere, with
// equality on the assigned cells, and sum(u) + sum(v) = optimal cost.
struct DualCertificate {
  std::vector<Cost> row_potentials;
  std::vector<Cost> col_potentials;

  friend bool operator==(const DualCertificate&, const DualCertificate&) = default;
};

struct SolveReport {
  Cost optimal_cost = 0;
  Assignment assignment;
  // Brute force: permutations evaluated. Hungarian: adjust-step iterations.
  // Branch and bound: search-tree vertices whose children were generated.
  std::uint64_t nodes_expanded = 0;
  std::uint64_t edges_generated = 0;
  std::chrono::nanoseconds elapsed{0};
  std::optional<DualCertificate> certificate;
};

// Equality of everything except the wall-clock field.
bool same_result(const SolveReport& a, const SolveReport& b);

struct CertificateViolation {
  enum class Kind { kShape, kDualInfeasible, kSlackOnAssigned, kObjectiveGap };
  Kind kind;
  std::size_t row = 0;
  std::size_t col = 0;
  std::string detail;
};

// Checks the three certificate conditions against `m` and the report's
// assignment. Returns the first violation found, scanning row-major. A report
// without a certificate is reported as kShape.
std::optional<CertificateViolation> verify_certificate(const CostMatrix& m,
                                                       const SolveReport& report);

}  // namespace assign
