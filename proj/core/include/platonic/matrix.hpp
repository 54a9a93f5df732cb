#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "platonic/polynomial.hpp"

namespace platonic {

template <class R>
class Matrix {
public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, R(0)) {}
  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<R>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw std::domain_error("Matrix: ragged rows");
      for (size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  R& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const R& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::domain_error("Matrix: size mismatch");
    Matrix out(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        if (::platonic::is_zero((*this)(i, k))) continue;
        for (size_t j = 0; j < o.cols_; ++j) out(i, j) += (*this)(i, k) * o(k, j);
      }
    return out;
  }
  Matrix operator+(const Matrix& o) const {
    Matrix out = *this;
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] += o.a_[k];
    return out;
  }
  Matrix operator-(const Matrix& o) const {
    Matrix out = *this;
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] -= o.a_[k];
    return out;
  }
  Matrix scaled(const R& s) const {
    Matrix out = *this;
    for (auto& v : out.a_) v = v * s;
    return out;
  }
  Matrix transposed() const {
    Matrix out(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  Matrix submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const {
    Matrix out(rows.size(), cols.size());
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
    return out;
  }

  std::vector<std::vector<R>> row_vectors() const {
    std::vector<std::vector<R>> out(rows_);
    for (size_t i = 0; i < rows_; ++i) {
      out[i].reserve(cols_);
      for (size_t j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j));
    }
    return out;
  }

private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<R> a_;
};

// Determinant over an integral domain (fraction-free Bareiss).
template <class R>
R determinant(const Matrix<R>& m) {
  if (m.rows() != m.cols()) throw std::domain_error("determinant: not square");
  return bareiss_determinant(m.row_vectors());
}

// Minor on explicit index sets.
template <class R>
R minor_det(const Matrix<R>& m, const std::vector<size_t>& rows, const std::vector<size_t>& cols) {
  return determinant(m.submatrix(rows, cols));
}

// Rank over an integral domain via fraction-free elimination with full pivot
// search by exact zero test.
template <class R>
size_t rank_of(Matrix<R> m) {
  size_t r = 0;
  size_t rows = m.rows(), cols = m.cols();
  R prev(1);
  for (size_t col = 0; col < cols && r < rows; ++col) {
    size_t piv = r;
    while (piv < rows && ::platonic::is_zero(m(piv, col))) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = col + 1; j < cols; ++j)
        m(i, j) = exact_div(m(r, col) * m(i, j) - m(i, col) * m(r, j), prev);
      m(i, col) = R(0);
    }
    prev = m(r, col);
    ++r;
  }
  return r;
}

// Reduced row echelon form over a field; returns pivot column indices.
template <class R>
std::vector<size_t> rref(Matrix<R>& m) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    size_t piv = r;
    while (piv < m.rows() && ::platonic::is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    R inv = R(1) / m(r, col);
    for (size_t j = col; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r || ::platonic::is_zero(m(i, col))) continue;
      R f = m(i, col);
      for (size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

// Kernel basis over a field (column vectors of m mapped to zero).
template <class R>
std::vector<std::vector<R>> kernel_basis(Matrix<R> m) {
  std::vector<size_t> pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<R>> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<R> v(m.cols(), R(0));
    v[free] = R(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

using KMatrix = Matrix<KElement>;
using QMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Int>;

inline bool is_zero(const Int& v) { return v == 0; }
inline Int exact_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (q * b != a) throw std::domain_error("Int: inexact division");
  return q;
}

// Invariant factor sequence d1 | d2 | ... (nonnegative, zeros trailing).
std::vector<Int> smith_normal_form(IntMatrix m);

// Monic characteristic polynomial det(lambda I - M) of a rational matrix.
QPoly char_poly(const QMatrix& m);

// Rank of an integer matrix reduced modulo a prime.
size_t rank_mod_p(const IntMatrix& m, long p);

}  // namespace platonic
