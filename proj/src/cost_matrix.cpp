#include "assign/cost_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace assign {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonSquare: return "NonSquare";
    case ErrorCode::kNegativeCost: return "NegativeCost";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kPermutationInvalid: return "PermutationInvalid";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::kNoUncoveredCell: return "NoUncoveredCell";
    case ErrorCode::kExpandComplete: return "ExpandComplete";
    case ErrorCode::kInvalidRange: return "InvalidRange";
    case ErrorCode::kInsufficientData: return "InsufficientData";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kNonIntegerCost: return "NonIntegerCost";
    case ErrorCode::kUnknownSolver: return "UnknownSolver";
  }
  return "Unknown";
}

Cost checked_add(Cost a, Cost b) {
  Cost out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow,
                std::to_string(a) + " + " + std::to_string(b) + " does not fit in 64 bits");
  }
  return out;
}

Cost checked_sub(Cost a, Cost b) {
  Cost out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow,
                std::to_string(a) + " - " + std::to_string(b) + " does not fit in 64 bits");
  }
  return out;
}

std::vector<std::vector<Cost>> SquareGrid::to_rows() const {
  std::vector<std::vector<Cost>> rows(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    auto r = row(i);
    rows[i].assign(r.begin(), r.end());
  }
  return rows;
}

namespace {

void check_non_negative(const SquareGrid& grid) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      if (grid(i, j) < 0) {
        throw Error(ErrorCode::kNegativeCost, "entry (" + std::to_string(i) + ", " +
                                                  std::to_string(j) + ") is " +
                                                  std::to_string(grid(i, j)));
      }
    }
  }
}

}  // namespace

CostMatrix::CostMatrix(const std::vector<std::vector<Cost>>& rows)
    : grid_(rows.size()) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(ErrorCode::kNonSquare, "row " + std::to_string(i) + " has " +
                                             std::to_string(rows[i].size()) +
                                             " entries, expected " +
                                             std::to_string(rows.size()));
    }
    std::copy(rows[i].begin(), rows[i].end(), grid_.row(i).begin());
  }
  check_non_negative(grid_);
}

CostMatrix::CostMatrix(std::initializer_list<std::initializer_list<Cost>> rows)
    : CostMatrix(std::vector<std::vector<Cost>>(rows.begin(), rows.end())) {}

CostMatrix::CostMatrix(SquareGrid grid) : grid_(std::move(grid)) {
  check_non_negative(grid_);
}

Cost CostMatrix::max_entry() const {
  Cost best = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    for (Cost c : row(i)) best = std::max(best, c);
  }
  return best;
}

std::string AssignmentIssue::message() const {
  switch (kind) {
    case Kind::kLength:
      return "mapping has length " + std::to_string(index);
    case Kind::kDuplicate:
      return "job at position " + std::to_string(index) + " is already assigned";
    case Kind::kOutOfRange:
      return "job at position " + std::to_string(index) + " is out of range";
  }
  return "invalid assignment";
}

std::optional<AssignmentIssue> validate_assignment(const Assignment& a, std::size_t k) {
  if (a.size() != k) return AssignmentIssue{AssignmentIssue::Kind::kLength, a.size()};
  std::vector<bool> seen(k, false);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t job = a.mapping[i];
    if (job >= k) return AssignmentIssue{AssignmentIssue::Kind::kOutOfRange, i};
    if (seen[job]) return AssignmentIssue{AssignmentIssue::Kind::kDuplicate, i};
    seen[job] = true;
  }
  return std::nullopt;
}

Cost assignment_cost(const CostMatrix& m, const Assignment& a) {
  if (auto issue = validate_assignment(a, m.size())) {
    if (issue->kind == AssignmentIssue::Kind::kLength) {
      throw Error(ErrorCode::kDimensionMismatch, issue->message() + ", matrix has K = " +
                                                     std::to_string(m.size()));
    }
    throw Error(ErrorCode::kPermutationInvalid, issue->message());
  }
  Cost total = 0;
  for (std::size_t i = 0; i < m.size(); ++i) total = checked_add(total, m(i, a.mapping[i]));
  return total;
}

Permutations::iterator::iterator(std::size_t k) : done_(false) {
  current_.mapping.resize(k);
  std::iota(current_.mapping.begin(), current_.mapping.end(), std::size_t{0});
}

Permutations::iterator& Permutations::iterator::operator++() {
  if (!std::next_permutation(current_.mapping.begin(), current_.mapping.end())) {
    done_ = true;
  }
  return *this;
}

}  // namespace assign
