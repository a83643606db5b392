#include "greenforge/linalg.hpp"

#include <stdexcept>

namespace greenforge {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
  Vector out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t k = 0; k < a.data_.size(); ++k) {
    if (!(a.data_[k] == b.data_[k])) return false;
  }
  return true;
}

bool EchelonBasis::insert(Vector v) {
  if (v.size() != dim_) throw std::invalid_argument("vector has the wrong dimension");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar c = v[pivots_[r]];
    if (c.is_zero()) continue;
    const Vector& row = rows_[r];
    for (std::size_t k = pivots_[r]; k < dim_; ++k) {
      if (!row[k].is_zero()) v[k].sub_mul(c, row[k]);
    }
  }
  std::size_t pivot = 0;
  while (pivot < dim_ && v[pivot].is_zero()) ++pivot;
  if (pivot == dim_) return false;

  const Scalar inv = v[pivot].inverse();
  for (std::size_t k = pivot; k < dim_; ++k) {
    if (!v[k].is_zero()) v[k] = v[k] * inv;
  }
  // Keep the basis fully reduced so later pivots see zeros in earlier columns.
  for (auto& row : rows_) {
    const Scalar c = row[pivot];
    if (c.is_zero()) continue;
    for (std::size_t k = pivot; k < dim_; ++k) {
      if (!v[k].is_zero()) row[k].sub_mul(c, v[k]);
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

std::size_t rank(const Matrix& m) {
  // Row rank equals column rank; insert whichever side is shorter.
  if (m.cols() <= m.rows()) {
    EchelonBasis basis(m.rows());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Vector col(m.rows());
      for (std::size_t r = 0; r < m.rows(); ++r) col[r] = m(r, c);
      basis.insert(std::move(col));
    }
    return basis.rank();
  }
  EchelonBasis basis(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vector row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) row[c] = m(r, c);
    basis.insert(std::move(row));
  }
  return basis.rank();
}

}  // namespace greenforge
