#include "nhlab/matrix.hpp"

#include <algorithm>
#include <map>

#include "nhlab/error.hpp"

namespace nhlab {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::kDimensionMismatch, "matrix/vector size mismatch");
  std::vector<Scalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!v[c].is_zero() && !(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!((*this)(r, c) == Scalar(r == c ? 1 : 0))) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::kDimensionMismatch, "matrix product size mismatch");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
    }
  return m;
}

std::size_t sparse_rank(std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows) {
  // Pivot rows keyed by their leading column, each normalized to leading 1.
  std::map<std::size_t, std::map<std::size_t, Scalar>> pivots;
  for (auto& raw : rows) {
    std::map<std::size_t, Scalar> row;
    for (auto& [c, v] : raw)
      if (!v.is_zero()) row[c] += v;
    std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
    while (!row.empty()) {
      auto lead = row.begin();
      auto pit = pivots.find(lead->first);
      if (pit == pivots.end()) {
        Scalar inv = lead->second.inverse();
        for (auto& [c, v] : row) v *= inv;
        pivots.emplace(lead->first, std::move(row));
        break;
      }
      Scalar factor = lead->second;
      for (const auto& [c, v] : pit->second) {
        auto& slot = row[c];
        slot -= factor * v;
        if (slot.is_zero()) row.erase(c);
      }
    }
  }
  return pivots.size();
}

}  // namespace nhlab
