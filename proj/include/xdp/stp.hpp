#pragma once

// Semi-tensor products. Both forms are computed by materializing the
// Kronecker factors and then taking a conventional product.

#include <string>

#include "xdp/checked.hpp"
#include "xdp/matrix.hpp"

namespace xdp {

/// All-ones vector J_k.
inline MixedVector one_vector(dim_t k) {
  if (k == 0) throw InvalidDimensionError("one_vector: k must be positive");
  return MixedVector(std::vector<double>(k, 1.0));
}

inline DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  const dim_t rows = checked_mul(a.rows(), b.rows());
  const dim_t cols = checked_mul(a.cols(), b.cols());
  checked_mul(rows, cols);
  DenseMatrix out(rows, cols);
  for (dim_t i = 0; i < a.rows(); ++i) {
    for (dim_t j = 0; j < a.cols(); ++j) {
      const double aij = a(i, j);
      for (dim_t p = 0; p < b.rows(); ++p) {
        for (dim_t q = 0; q < b.cols(); ++q) {
          out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
      }
    }
  }
  return out;
}

inline MixedVector kron(const MixedVector& x, const MixedVector& y) {
  const dim_t n = checked_mul(x.dim(), y.dim());
  std::vector<double> out(n);
  for (dim_t i = 0; i < x.dim(); ++i)
    for (dim_t j = 0; j < y.dim(); ++j) out[i * y.dim() + j] = x[i] * y[j];
  return MixedVector(std::move(out));
}

namespace detail {

// A ⊗ I_k (left) or I_k ⊗ A (right); k = 1 returns A unchanged.
inline DenseMatrix pad_identity(const DenseMatrix& a, dim_t k, Side side) {
  if (k == 1) return a;
  const DenseMatrix eye = DenseMatrix::identity(k);
  return side == Side::Left ? kron(a, eye) : kron(eye, a);
}

}  // namespace detail

/// Matrix-matrix STP. With t = lcm(cols_A, rows_B):
///   Left:  (A ⊗ I_{t/cols_A}) (B ⊗ I_{t/rows_B})
///   Right: (I_{t/cols_A} ⊗ A) (I_{t/rows_B} ⊗ B)
/// Reduces to the conventional product when cols_A == rows_B.
inline DenseMatrix stp_mm(const DenseMatrix& a, const DenseMatrix& b,
                          Side side = Side::Left) {
  const dim_t t = checked_lcm(a.cols(), b.rows());
  return matmul(detail::pad_identity(a, t / a.cols(), side),
                detail::pad_identity(b, t / b.rows(), side));
}

/// Matrix-vector STP. With t = lcm(cols_A, dim_x):
///   Left:  (A ⊗ I_{t/cols_A}) (x ⊗ J_{t/dim_x})
///   Right: (I_{t/cols_A} ⊗ A) (J_{t/dim_x} ⊗ x)
/// The result has dimension rows_A * t / cols_A.
inline MixedVector stp_mv(const DenseMatrix& a, const MixedVector& x,
                          Side side = Side::Left) {
  const dim_t t = checked_lcm(a.cols(), x.dim());
  const dim_t reps = t / x.dim();
  const MixedVector expanded =
      reps == 1 ? x
                : (side == Side::Left ? kron(x, one_vector(reps))
                                      : kron(one_vector(reps), x));
  return matvec(detail::pad_identity(a, t / a.cols(), side), expanded);
}

}  // namespace xdp
