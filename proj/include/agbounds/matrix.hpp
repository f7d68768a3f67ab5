#ifndef AGBOUNDS_MATRIX_HPP
#define AGBOUNDS_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "agbounds/field.hpp"

namespace agc {

using Vector = std::vector<Element>;

/// Dense row-major matrix of field elements.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Element> data);

  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Element at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Element> values);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

struct RowReduction {
  std::size_t rank = 0;
  /// Reduced row echelon form, restricted to its `rank` nonzero rows.
  Matrix echelon;
  std::vector<std::size_t> pivot_columns;
  /// Basis of {v : M v = 0}, one vector per free column.
  std::vector<Vector> nullspace;
};

/// Gauss-Jordan elimination scanning columns left to right.
RowReduction row_reduce(const Field& f, Matrix m);

/// Rank by an independent elimination order: pivots are chosen row by row and
/// eliminated with column operations. Used to cross-check `row_reduce`.
std::size_t rank_by_column_elimination(const Field& f, Matrix m);

/// y = M v
Vector multiply(const Field& f, const Matrix& m, std::span<const Element> v);

}  // namespace agc

#endif  // AGBOUNDS_MATRIX_HPP
