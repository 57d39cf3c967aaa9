#pragma once

// Exact dense linear algebra over Z, Q and F used throughout the library.

#include <cstddef>
#include <vector>

#include "hvor/number_field.hpp"

namespace hvor {

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Row-major dense matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;

/// Exact rank of a list of row vectors.
std::size_t rank(const std::vector<IntVector>& rows);
std::size_t rank(const std::vector<RatVector>& rows);

/// Greedy maximal independent subset, scanning in order; returns indices.
std::vector<std::size_t> independent_subset(const std::vector<IntVector>& rows);

/// Coordinates c_1 < ... < c_r such that projecting the row space onto them is
/// injective (the pivot columns of the reduced echelon form).
std::vector<std::size_t> pivot_columns(const std::vector<IntVector>& rows);

/// Basis of {x : <row, x> = 0 for all rows}.
std::vector<RatVector> nullspace(const std::vector<RatVector>& rows, std::size_t dim);

/// Fraction-free (Bareiss) determinant of a square integer matrix given by rows.
Integer determinant(std::vector<IntVector> rows);
int determinant_sign(const std::vector<IntVector>& rows);

/// Multiply by the lcm of denominators and divide by the content; the result is
/// a primitive integer vector with the same direction.
IntVector primitive(const RatVector& v);
IntVector primitive(IntVector v);

Integer dot(const IntVector& x, const IntVector& y);

/// Square matrices over F.
using FieldMatrix = Matrix<QuadElement>;

/// Inverse over F; throws std::domain_error when singular.
FieldMatrix inverse(const FieldMatrix& m);
QuadElement determinant(const FieldMatrix& m);

/// Rank over F of a list of vectors (each of length n).
std::size_t field_rank(const std::vector<std::vector<QuadElement>>& vectors);

}  // namespace hvor
