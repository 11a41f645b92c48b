#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "assign/error.hpp"

namespace assign {

// Costs are exact integers. Sums go through checked_add so an oversized
// instance reports kOverflow instead of wrapping.
using Cost = std::int64_t;

Cost checked_add(Cost a, Cost b);
Cost checked_sub(Cost a, Cost b);

// Dense row-major square grid. Used both for validated cost matrices and for
// the mutable reduced matrices of the Hungarian method.
class SquareGrid {
 public:
  SquareGrid() = default;
  explicit SquareGrid(std::size_t size, Cost fill = 0)
      : size_(size), data_(size * size, fill) {}

  std::size_t size() const noexcept { return size_; }

  Cost operator()(std::size_t row, std::size_t col) const {
    return data_[row * size_ + col];
  }
  Cost& operator()(std::size_t row, std::size_t col) {
    return data_[row * size_ + col];
  }

  std::span<const Cost> row(std::size_t r) const {
    return {data_.data() + r * size_, size_};
  }
  std::span<Cost> row(std::size_t r) { return {data_.data() + r * size_, size_}; }

  std::vector<std::vector<Cost>> to_rows() const;

  friend bool operator==(const SquareGrid&, const SquareGrid&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<Cost> data_;
};

// Worker-by-job cost matrix: entry(i, j) is the cost of worker i doing job j.
// Immutable once constructed; every entry is non-negative.
class CostMatrix {
 public:
  // The empty (K = 0) matrix.
  CostMatrix() = default;

  // Throws kNonSquare when any row length differs from the row count and
  // kNegativeCost on a negative entry.
  explicit CostMatrix(const std::vector<std::vector<Cost>>& rows);
  CostMatrix(std::initializer_list<std::initializer_list<Cost>> rows);
  explicit CostMatrix(SquareGrid grid);

  std::size_t size() const noexcept { return grid_.size(); }
  bool empty() const noexcept { return grid_.size() == 0; }

  Cost operator()(std::size_t worker, std::size_t job) const {
    return grid_(worker, job);
  }
  std::span<const Cost> row(std::size_t worker) const { return grid_.row(worker); }
  const SquareGrid& grid() const noexcept { return grid_; }

  Cost max_entry() const;

  friend bool operator==(const CostMatrix&, const CostMatrix&) = default;

 private:
  SquareGrid grid_;
};

inline CostMatrix new_cost_matrix(const std::vector<std::vector<Cost>>& rows) {
  return CostMatrix(rows);
}

// mapping[i] is the job given to worker i.
struct Assignment {
  std::vector<std::size_t> mapping;

  std::size_t size() const noexcept { return mapping.size(); }
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct AssignmentIssue {
  enum class Kind { kLength, kDuplicate, kOutOfRange };
  Kind kind;
  // Offending position in the mapping (for kLength: the actual length).
  std::size_t index;

  std::string message() const;
};

// Empty optional when `a` is a permutation of {0, ..., k-1}.
std::optional<AssignmentIssue> validate_assignment(const Assignment& a,
                                                   std::size_t k);

// Sum of entry(i, a.mapping[i]). Throws kDimensionMismatch,
// kPermutationInvalid or kOverflow.
Cost assignment_cost(const CostMatrix& m, const Assignment& a);

// Lazy lexicographic enumeration of all k! permutations of {0, ..., k-1}.
// Only the current permutation is held in memory. k = 0 yields one empty
// mapping.
class Permutations {
 public:
  class iterator {
   public:
    using value_type = Assignment;
    using difference_type = std::ptrdiff_t;
    using reference = const Assignment&;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;

    reference operator*() const { return current_; }
    const Assignment* operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }

    bool operator==(std::default_sentinel_t) const { return done_; }

   private:
    friend class Permutations;
    explicit iterator(std::size_t k);

    Assignment current_;
    bool done_ = true;
  };

  explicit Permutations(std::size_t k) : k_(k) {}

  iterator begin() const { return iterator(k_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  std::size_t k_;
};

inline Permutations permutations(std::size_t k) { return Permutations(k); }

}  // namespace assign
