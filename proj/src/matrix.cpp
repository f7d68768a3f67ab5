#include "agbounds/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace agc {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Element> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw std::invalid_argument("matrix data size mismatch");
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void Matrix::append_row(std::span<const Element> values) {
  if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

RowReduction row_reduce(const Field& f, Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  RowReduction out;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t r = pivot_row;
    while (r < rows && m.at(r, c) == f.zero()) ++r;
    if (r == rows) continue;
    if (r != pivot_row) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m.at(r, k), m.at(pivot_row, k));
    }
    const Element scale = f.inv(m.at(pivot_row, c));
    for (std::size_t k = c; k < cols; ++k) m.at(pivot_row, k) = f.mul(m.at(pivot_row, k), scale);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivot_row) continue;
      const Element factor = m.at(i, c);
      if (factor == f.zero()) continue;
      for (std::size_t k = c; k < cols; ++k) {
        m.at(i, k) = f.sub(m.at(i, k), f.mul(factor, m.at(pivot_row, k)));
      }
    }
    out.pivot_columns.push_back(c);
    ++pivot_row;
  }
  out.rank = pivot_row;

  out.echelon = Matrix(0, cols);
  for (std::size_t i = 0; i < out.rank; ++i) out.echelon.append_row(m.row(i));

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : out.pivot_columns) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < out.rank; ++i) {
      v[out.pivot_columns[i]] = f.neg(out.echelon.at(i, free));
    }
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

std::size_t rank_by_column_elimination(const Field& f, Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  std::vector<bool> used(cols, false);
  for (std::size_t r = 0; r < rows; ++r) {
    std::size_t c = 0;
    while (c < cols && (used[c] || m.at(r, c) == f.zero())) ++c;
    if (c == cols) continue;
    used[c] = true;
    ++rank;
    const Element scale = f.inv(m.at(r, c));
    for (std::size_t i = r; i < rows; ++i) m.at(i, c) = f.mul(m.at(i, c), scale);
    for (std::size_t k = 0; k < cols; ++k) {
      if (k == c) continue;
      const Element factor = m.at(r, k);
      if (factor == f.zero()) continue;
      for (std::size_t i = r; i < rows; ++i) {
        m.at(i, k) = f.sub(m.at(i, k), f.mul(factor, m.at(i, c)));
      }
    }
  }
  return rank;
}

Vector multiply(const Field& f, const Matrix& m, std::span<const Element> v) {
  if (v.size() != m.cols()) throw std::invalid_argument("dimension mismatch");
  Vector out(m.rows(), f.zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Element acc = f.zero();
    for (std::size_t c = 0; c < m.cols(); ++c) acc = f.add(acc, f.mul(m.at(r, c), v[c]));
    out[r] = acc;
  }
  return out;
}

}  // namespace agc
