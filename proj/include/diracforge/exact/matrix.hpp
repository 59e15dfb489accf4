#pragma once

#include "diracforge/errors.hpp"
#include "diracforge/exact/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace diracforge {

/// Dense row-major matrix over an exact field (Rational or Scalar).
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static DenseMatrix identity(size_t n) {
    DenseMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  DenseMatrix& operator+=(const DenseMatrix& o) {
    checkSame(o, "+");
    for (size_t k = 0; k < data_.size(); ++k)
      if (!diracforge::isZero(o.data_[k])) data_[k] += o.data_[k];
    return *this;
  }
  DenseMatrix& operator-=(const DenseMatrix& o) {
    checkSame(o, "-");
    for (size_t k = 0; k < data_.size(); ++k)
      if (!diracforge::isZero(o.data_[k])) data_[k] -= o.data_[k];
    return *this;
  }
  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  DenseMatrix operator-() const {
    DenseMatrix out = *this;
    for (auto& x : out.data_)
      if (!diracforge::isZero(x)) x = -x;
    return out;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    require(a.cols_ == b.rows_, ErrorKind::DimensionMismatch,
            "matrix product " + a.shape() + " * " + b.shape());
    DenseMatrix out(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (diracforge::isZero(aik)) continue;
        for (size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (!diracforge::isZero(bkj)) out(i, j) += aik * bkj;
        }
      }
    return out;
  }

  friend DenseMatrix operator*(const T& s, const DenseMatrix& m) {
    DenseMatrix out(m.rows_, m.cols_);
    if (diracforge::isZero(s)) return out;
    for (size_t k = 0; k < m.data_.size(); ++k)
      if (!diracforge::isZero(m.data_[k])) out.data_[k] = s * m.data_[k];
    return out;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  DenseMatrix transpose() const {
    DenseMatrix out(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  /// Conjugate transpose.
  DenseMatrix adjoint() const {
    DenseMatrix out(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) out(j, i) = conjugate((*this)(i, j));
    return out;
  }

  bool isZero() const {
    for (const auto& x : data_)
      if (!diracforge::isZero(x)) return false;
    return true;
  }

  /// If the matrix equals s*I, returns s.
  std::optional<T> scalarValue() const {
    if (rows_ != cols_) return std::nullopt;
    if (rows_ == 0) return T(0);
    T s = (*this)(0, 0);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) {
        const T& x = (*this)(i, j);
        if (i == j ? !(x == s) : !diracforge::isZero(x)) return std::nullopt;
      }
    return s;
  }

  DenseMatrix submatrix(const std::vector<size_t>& rowIdx, const std::vector<size_t>& colIdx) const {
    DenseMatrix out(rowIdx.size(), colIdx.size());
    for (size_t i = 0; i < rowIdx.size(); ++i)
      for (size_t j = 0; j < colIdx.size(); ++j) out(i, j) = (*this)(rowIdx[i], colIdx[j]);
    return out;
  }

  std::vector<T> column(size_t j) const {
    std::vector<T> out(rows_);
    for (size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    require(v.size() == cols_, ErrorKind::DimensionMismatch, "matrix-vector size");
    std::vector<T> out(rows_, T(0));
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) {
        const T& a = (*this)(i, j);
        if (!diracforge::isZero(a) && !diracforge::isZero(v[j])) out[i] += a * v[j];
      }
    return out;
  }

  static DenseMatrix fromColumns(const std::vector<std::vector<T>>& cols, size_t rows) {
    DenseMatrix out(rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j)
      for (size_t i = 0; i < rows; ++i) out(i, j) = cols[j][i];
    return out;
  }

  /// Vertical stack.
  static DenseMatrix stack(const std::vector<DenseMatrix>& blocks) {
    if (blocks.empty()) return {};
    size_t rows = 0, cols = blocks[0].cols();
    for (const auto& b : blocks) {
      require(b.cols() == cols, ErrorKind::DimensionMismatch, "stack of mismatched widths");
      rows += b.rows();
    }
    DenseMatrix out(rows, cols);
    size_t r = 0;
    for (const auto& b : blocks)
      for (size_t i = 0; i < b.rows(); ++i, ++r)
        for (size_t j = 0; j < cols; ++j) out(r, j) = b(i, j);
    return out;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void checkSame(const DenseMatrix& o, const char* op) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::DimensionMismatch,
            std::string("matrix ") + op + " " + shape() + " vs " + o.shape());
  }

  size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using RMatrix = DenseMatrix<Rational>;
using SMatrix = DenseMatrix<Scalar>;

template <class T>
DenseMatrix<T> kron(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  DenseMatrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      const T& aij = a(i, j);
      if (isZero(aij)) continue;
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l)
          if (!isZero(b(k, l))) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

template <class T>
DenseMatrix<T> commutator(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  return a * b - b * a;
}

template <class T>
struct RowEchelon {
  DenseMatrix<T> reduced;
  std::vector<size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
template <class T>
RowEchelon<T> rref(DenseMatrix<T> m) {
  RowEchelon<T> out;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t pivot = row;
    while (pivot < m.rows() && isZero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(pivot, j));
    T inv = inverseOf(m(row, col));
    for (size_t j = col; j < m.cols(); ++j)
      if (!isZero(m(row, j))) m(row, j) = m(row, j) * inv;
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r == row || isZero(m(r, col))) continue;
      T factor = m(r, col);
      for (size_t j = col; j < m.cols(); ++j)
        if (!isZero(m(row, j))) m(r, j) -= factor * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <class T>
size_t rankOf(const DenseMatrix<T>& m) {
  return rref(m).pivots.size();
}

/// Basis of {x : m x = 0}, one vector per free column.
template <class T>
std::vector<std::vector<T>> nullspace(const DenseMatrix<T>& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> isPivot(m.cols(), false);
  for (size_t p : pivots) isPivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (isPivot[free]) continue;
    std::vector<T> v(m.cols(), T(0));
    v[free] = T(1);
    for (size_t k = 0; k < pivots.size(); ++k)
      if (!isZero(r(k, free))) v[pivots[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves a x = b for square invertible a (b may have several columns).
template <class T>
DenseMatrix<T> solve(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  require(a.rows() == a.cols() && a.rows() == b.rows(), ErrorKind::DimensionMismatch, "solve shape");
  size_t n = a.rows();
  DenseMatrix<T> aug(n, n + b.cols());
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (size_t j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
  }
  auto [r, pivots] = rref(std::move(aug));
  require(pivots.size() == n && (n == 0 || pivots.back() == n - 1), ErrorKind::InvariantViolated,
          "singular system");
  DenseMatrix<T> x(n, b.cols());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < b.cols(); ++j) x(i, j) = r(i, n + j);
  return x;
}

template <class T>
DenseMatrix<T> inverse(const DenseMatrix<T>& a) {
  return solve(a, DenseMatrix<T>::identity(a.rows()));
}

inline SMatrix toScalarMatrix(const RMatrix& m) {
  SMatrix out(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) out(i, j) = Scalar(m(i, j));
  return out;
}

}  // namespace diracforge
