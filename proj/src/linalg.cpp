#include "tqv/linalg.hpp"

#include <algorithm>
#include <utility>

#include "tqv/error.hpp"

namespace tqv {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::conj_transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c).conj();
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& x) const {
  if (x.size() != cols_) throw InputError("vector length mismatch");
  std::vector<Scalar> y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
  return y;
}

std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    }
    Scalar inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Scalar f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return row_reduce(m).size(); }

std::vector<std::vector<Scalar>> nullspace(const Matrix& m) {
  Matrix r = m;
  auto pivots = row_reduce(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols());
    v[free] = Scalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

SpanBasis::SpanBasis(std::size_t dim, const std::vector<std::vector<Scalar>>& vectors)
    : dim_(dim), echelon_(vectors.size(), dim) {
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != dim) throw InputError("span vector length mismatch");
    for (std::size_t c = 0; c < dim; ++c) echelon_(r, c) = vectors[r][c];
  }
  pivots_ = row_reduce(echelon_);
}

bool SpanBasis::contains(std::vector<Scalar> v) const {
  if (v.size() != dim_) throw InputError("span vector length mismatch");
  // echelon_ is in RREF, so eliminating each pivot coordinate once suffices.
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Scalar f = v[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < dim_; ++c) v[c] -= f * echelon_(i, c);
  }
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace tqv
