#pragma once

#include "kleinian/error.hpp"
#include "kleinian/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace kleinian {

using RVector = std::vector<Rational>;

/// Dense row-major matrix over the rationals. An r x 0 or 0 x c matrix is a
/// valid object (zero-dimensional vertex spaces produce them constantly).
class RMatrix {
public:
  RMatrix() = default;
  RMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Integer literal convenience for tests and fixed constructions.
  RMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw ShapeError("ragged matrix literal");
      for (long x : row) data_.emplace_back(x);
    }
  }

  static RMatrix identity(std::size_t n) {
    RMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static RMatrix column(const RVector& v) {
    RMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  /// Matrix whose columns are the given vectors, all of length `height`.
  static RMatrix from_columns(const std::vector<RVector>& cols, std::size_t height) {
    RMatrix m(height, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != height) throw ShapeError("column length mismatch");
      for (std::size_t i = 0; i < height; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RVector row(std::size_t i) const {
    return RVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  RVector col(std::size_t j) const {
    RVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  RMatrix transpose() const {
    RMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  RMatrix& operator+=(const RMatrix& o) {
    require_same_shape(o, "+");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  RMatrix& operator-=(const RMatrix& o) {
    require_same_shape(o, "-");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  RMatrix& operator*=(const Rational& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend RMatrix operator+(RMatrix a, const RMatrix& b) { return a += b; }
  friend RMatrix operator-(RMatrix a, const RMatrix& b) { return a -= b; }
  friend RMatrix operator*(RMatrix a, const Rational& s) { return a *= s; }
  friend RMatrix operator*(const Rational& s, RMatrix a) { return a *= s; }
  friend RMatrix operator-(RMatrix a) { return a *= Rational(-1); }

  friend RMatrix operator*(const RMatrix& a, const RMatrix& b) {
    if (a.cols_ != b.rows_)
      throw ShapeError("cannot multiply " + a.shape() + " by " + b.shape());
    RMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend RVector operator*(const RMatrix& a, const RVector& v) {
    if (a.cols_ != v.size()) throw ShapeError("cannot apply " + a.shape() + " to vector of length " + std::to_string(v.size()));
    RVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (a(i, k) != 0) out[i] += a(i, k) * v[k];
    return out;
  }

  friend bool operator==(const RMatrix& a, const RMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
  void require_same_shape(const RMatrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw ShapeError(std::string("shape mismatch in ") + op + ": " + shape() + " vs " + o.shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

inline RMatrix commutator(const RMatrix& a, const RMatrix& b) { return a * b - b * a; }

inline RMatrix power(const RMatrix& a, unsigned k) {
  if (a.rows() != a.cols()) throw ShapeError("power of non-square matrix " + a.shape());
  RMatrix result = RMatrix::identity(a.rows());
  for (unsigned i = 0; i < k; ++i) result = result * a;
  return result;
}

/// Rows of `top` above rows of `bottom`; column counts must agree.
inline RMatrix vstack(const std::vector<RMatrix>& blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw ShapeError("vstack column mismatch");
    rows += b.rows();
  }
  RMatrix m(rows, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(r0 + i, j) = b(i, j);
    r0 += b.rows();
  }
  return m;
}

inline RMatrix hstack(const std::vector<RMatrix>& blocks, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw ShapeError("hstack row mismatch");
    cols += b.cols();
  }
  RMatrix m(rows, cols);
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, c0 + j) = b(i, j);
    c0 += b.cols();
  }
  return m;
}

inline RMatrix block_diagonal(const RMatrix& a, const RMatrix& b) {
  RMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

} // namespace kleinian
