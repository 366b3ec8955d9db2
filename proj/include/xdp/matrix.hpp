#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xdp/checked.hpp"
#include "xdp/error.hpp"

namespace xdp {

// Left system: a vector is embedded into a larger space by repeating each
// entry (x ⊗ J_k). Right system: by tiling the whole vector (J_k ⊗ x).
enum class Side { Left, Right };

inline std::string_view to_string(Side s) {
  return s == Side::Left ? "left" : "right";
}

namespace detail {

inline void require_finite(const std::vector<double>& data, const char* what) {
  for (double v : data) {
    if (!std::isfinite(v)) {
      throw ParseError(std::string(what) + " contains a non-finite entry");
    }
  }
}

}  // namespace detail

/// Finite real vector tagged with its dimension; an element of the mixed
/// dimension space. The dimension is always at least 1.
class MixedVector {
 public:
  explicit MixedVector(std::vector<double> data) : data_(std::move(data)) {
    if (data_.empty()) throw InvalidDimensionError("vector of dimension 0");
    detail::require_finite(data_, "vector");
  }
  MixedVector(std::initializer_list<double> values)
      : MixedVector(std::vector<double>(values)) {}

  static MixedVector zeros(dim_t n) {
    if (n == 0) throw InvalidDimensionError("vector of dimension 0");
    return MixedVector(std::vector<double>(n, 0.0));
  }

  dim_t dim() const { return data_.size(); }
  double operator[](std::size_t i) const { return data_[i]; }
  double& operator[](std::size_t i) { return data_[i]; }
  const std::vector<double>& values() const { return data_; }
  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

  friend bool operator==(const MixedVector&, const MixedVector&) = default;

 private:
  std::vector<double> data_;
};

/// Row-major dense real matrix with explicit shape.
class DenseMatrix {
 public:
  DenseMatrix(dim_t rows, dim_t cols)
      : rows_(rows), cols_(cols), data_(checked_size(rows, cols), 0.0) {}

  DenseMatrix(dim_t rows, dim_t cols, std::vector<double> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != checked_size(rows, cols)) {
      throw ShapeError("matrix data length " + std::to_string(data_.size()) +
                       " does not match shape " + std::to_string(rows) + "x" +
                       std::to_string(cols));
    }
    detail::require_finite(data_, "matrix");
  }

  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows)
      : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    checked_size(rows_, cols_);
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw ShapeError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
    detail::require_finite(data_, "matrix");
  }

  static DenseMatrix identity(dim_t n) {
    DenseMatrix m(n, n);
    for (dim_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  /// n×1 column holding the entries of x.
  static DenseMatrix column(const MixedVector& x) {
    return DenseMatrix(x.dim(), 1, x.values());
  }

  dim_t rows() const { return rows_; }
  dim_t cols() const { return cols_; }
  double operator()(dim_t i, dim_t j) const { return data_[i * cols_ + j]; }
  double& operator()(dim_t i, dim_t j) { return data_[i * cols_ + j]; }
  const std::vector<double>& values() const { return data_; }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (dim_t i = 0; i < rows_; ++i)
      for (dim_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  DenseMatrix column_subset(const std::vector<dim_t>& cols) const {
    DenseMatrix s(rows_, cols.size());
    for (dim_t i = 0; i < rows_; ++i)
      for (dim_t k = 0; k < cols.size(); ++k) s(i, k) = (*this)(i, cols[k]);
    return s;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  static dim_t checked_size(dim_t rows, dim_t cols) {
    if (rows == 0 || cols == 0) {
      throw InvalidDimensionError("matrix with a zero dimension");
    }
    return checked_mul(rows, cols);
  }

  dim_t rows_;
  dim_t cols_;
  std::vector<double> data_;
};

inline DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("matrix sum of different shapes");
  }
  std::vector<double> out(a.values());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.values()[i];
  return DenseMatrix(a.rows(), a.cols(), std::move(out));
}

inline DenseMatrix operator*(double r, const DenseMatrix& a) {
  std::vector<double> out(a.values());
  for (double& v : out) v *= r;
  return DenseMatrix(a.rows(), a.cols(), std::move(out));
}

/// Conventional product. Each entry is accumulated from 0 in ascending k, so
/// results are reproducible bit-for-bit.
inline DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul: " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " times " +
                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  DenseMatrix c(a.rows(), b.cols());
  for (dim_t i = 0; i < a.rows(); ++i) {
    for (dim_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (dim_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

inline MixedVector matvec(const DenseMatrix& a, const MixedVector& x) {
  if (a.cols() != x.dim()) {
    throw ShapeError("matvec: " + std::to_string(a.cols()) +
                     " columns against vector of dimension " +
                     std::to_string(x.dim()));
  }
  std::vector<double> y(a.rows(), 0.0);
  for (dim_t i = 0; i < a.rows(); ++i) {
    double acc = 0.0;
    for (dim_t k = 0; k < a.cols(); ++k) acc += a(i, k) * x[k];
    y[i] = acc;
  }
  return MixedVector(std::move(y));
}

}  // namespace xdp
