#pragma once

#include <cstddef>
#include <vector>

#include "nhlab/scalar.hpp"

namespace nhlab {

/// Small dense matrix of exact scalars, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> column(std::size_t c) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
  bool is_identity() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Rank of a list of sparse row vectors (column index -> value), exact elimination.
std::size_t sparse_rank(std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows);

}  // namespace nhlab
