#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "greenforge/scalar.hpp"

namespace greenforge {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Matrix-vector product, skipping zero entries.
  Vector apply(std::span<const Scalar> v) const;

  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// A subspace of K^dim held as a reduced row-echelon basis.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  /// Adds v to the spanning set; returns true if the rank grew.
  bool insert(Vector v);

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<Vector>& rows() const { return rows_; }

 private:
  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Exact rank by Gaussian elimination over the scalar field.
std::size_t rank(const Matrix& m);

}  // namespace greenforge
