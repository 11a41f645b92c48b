#include "assign/report.hpp"

#include <string>

namespace assign {

bool same_result(const SolveReport& a, const SolveReport& b) {
  return a.optimal_cost == b.optimal_cost && a.assignment == b.assignment &&
         a.nodes_expanded == b.nodes_expanded && a.edges_generated == b.edges_generated &&
         a.certificate == b.certificate;
}

std::optional<CertificateViolation> verify_certificate(const CostMatrix& m,
                                                       const SolveReport& report) {
  using Kind = CertificateViolation::Kind;
  const std::size_t k = m.size();
  if (!report.certificate) return CertificateViolation{Kind::kShape, 0, 0, "no certificate"};
  const auto& u = report.certificate->row_potentials;
  const auto& v = report.certificate->col_potentials;
  if (u.size() != k || v.size() != k) {
    return CertificateViolation{Kind::kShape, 0, 0, "potential vectors do not have length K"};
  }
  if (validate_assignment(report.assignment, k)) {
    return CertificateViolation{Kind::kShape, 0, 0, "assignment is not a permutation"};
  }

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      // Potentials may be near the 64-bit limits; compare in 128 bits.
      const __int128 lhs = static_cast<__int128>(u[i]) + v[j];
      if (lhs > m(i, j)) {
        return CertificateViolation{
            Kind::kDualInfeasible, i, j,
            "u[" + std::to_string(i) + "] + v[" + std::to_string(j) + "] = " +
                std::to_string(static_cast<long long>(lhs)) + " > " + std::to_string(m(i, j))};
      }
    }
  }

  __int128 dual_sum = 0;
  __int128 primal_sum = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = report.assignment.mapping[i];
    if (static_cast<__int128>(u[i]) + v[j] != m(i, j)) {
      return CertificateViolation{Kind::kSlackOnAssigned, i, j,
                                  "assigned cell has positive reduced cost"};
    }
    dual_sum += static_cast<__int128>(u[i]) + v[i];
    primal_sum += m(i, j);
  }
  if (dual_sum != report.optimal_cost || primal_sum != report.optimal_cost) {
    return CertificateViolation{Kind::kObjectiveGap, 0, 0,
                                "sum of potentials differs from the reported cost " +
                                    std::to_string(report.optimal_cost)};
  }
  return std::nullopt;
}

}  // namespace assign
