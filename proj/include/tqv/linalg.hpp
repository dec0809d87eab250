#ifndef TQV_LINALG_HPP_
#define TQV_LINALG_HPP_

#include <cstddef>
#include <vector>

#include "tqv/scalar.hpp"

namespace tqv {

/// Dense row-major matrix over Q(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool is_zero() const;
  Matrix conj_transpose() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::vector<Scalar> apply(const std::vector<Scalar>& x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of {x : m x = 0}.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m);

/// Reduced spanning set for membership queries. Build once, query many times.
class SpanBasis {
 public:
  SpanBasis(std::size_t dim, const std::vector<std::vector<Scalar>>& vectors);

  std::size_t dimension() const { return pivots_.size(); }
  bool contains(std::vector<Scalar> v) const;

 private:
  std::size_t dim_;
  Matrix echelon_;
  std::vector<std::size_t> pivots_;
};

}  // namespace tqv

#endif  // TQV_LINALG_HPP_
