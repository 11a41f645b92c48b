#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "assign/cost_matrix.hpp"

namespace assign {

// Text format: the first non-comment line holds K, then K lines of K
// whitespace-separated non-negative integers. Lines starting with '#' and
// blank lines are skipped. LF and CRLF are both accepted.
//
// Throws kSyntaxError (message carries the 1-based line number), kNonSquare,
// kNegativeCost or kNonIntegerCost.
CostMatrix parse_matrix(std::string_view text);

// Canonical form accepted by parse_matrix: "K\n" then one line per row.
std::string serialize_matrix(const CostMatrix& m);

// FNV-1a 64 over the canonical serialization, as 16 lowercase hex digits.
std::string matrix_digest(const CostMatrix& m);

}  // namespace assign
