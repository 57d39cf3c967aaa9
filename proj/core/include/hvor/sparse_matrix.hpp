#pragma once

// Sparse integer matrices, stored as an ordered map from (row, col) to a
// nonzero entry.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "hvor/number_field.hpp"

namespace hvor {

class SparseMatrix {
 public:
  using Key = std::pair<std::size_t, std::size_t>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  /// Adds v to entry (r, c); zero results are dropped.
  void add(std::size_t r, std::size_t c, const Integer& v);
  Integer at(std::size_t r, std::size_t c) const;
  const std::map<Key, Integer>& entries() const { return entries_; }

  std::vector<std::vector<Integer>> to_dense() const;
  static SparseMatrix from_dense(const std::vector<std::vector<Integer>>& m);

  /// this * other; throws std::invalid_argument on shape mismatch.
  SparseMatrix multiply(const SparseMatrix& other) const;

  friend bool operator==(const SparseMatrix& x, const SparseMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.entries_ == y.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<Key, Integer> entries_;
};

}  // namespace hvor
