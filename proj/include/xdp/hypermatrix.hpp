#pragma once

// Order-d real arrays stored in lexicographic index order: the first index
// varies slowest, the last fastest. Axes are numbered from 0.

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "xdp/checked.hpp"
#include "xdp/matrix.hpp"

namespace xdp {

using Dims = std::vector<dim_t>;

inline std::string dims_to_string(const Dims& dims) {
  std::string s = "(";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(dims[i]);
  }
  return s + ")";
}

class Hypermatrix {
 public:
  Hypermatrix(Dims dims, std::vector<double> data)
      : dims_(std::move(dims)), data_(std::move(data)) {
    if (data_.size() != validated_size(dims_)) {
      throw ShapeError("hypermatrix data length " +
                       std::to_string(data_.size()) + " does not match dims " +
                       dims_to_string(dims_));
    }
    detail::require_finite(data_, "hypermatrix");
  }

  static Hypermatrix zeros(Dims dims) {
    const dim_t n = validated_size(dims);
    return Hypermatrix(std::move(dims), std::vector<double>(n, 0.0));
  }

  static Hypermatrix from_matrix(const DenseMatrix& m) {
    return Hypermatrix({m.rows(), m.cols()}, m.values());
  }

  static Hypermatrix from_vector(const MixedVector& v) {
    return Hypermatrix({v.dim()}, v.values());
  }

  DenseMatrix to_matrix() const {
    if (order() != 2) throw ShapeError("to_matrix: order is not 2");
    return DenseMatrix(dims_[0], dims_[1], data_);
  }

  std::size_t order() const { return dims_.size(); }
  const Dims& dims() const { return dims_; }
  dim_t size() const { return data_.size(); }
  const std::vector<double>& values() const { return data_; }

  double at(const Dims& index) const { return data_[offset(index)]; }
  double& at(const Dims& index) { return data_[offset(index)]; }

  friend bool operator==(const Hypermatrix&, const Hypermatrix&) = default;

 private:
  static dim_t validated_size(const Dims& dims) {
    if (dims.empty()) throw InvalidDimensionError("hypermatrix of order 0");
    for (dim_t d : dims) {
      if (d == 0) throw InvalidDimensionError("hypermatrix with a zero range");
    }
    return checked_product(dims);
  }

  dim_t offset(const Dims& index) const {
    if (index.size() != dims_.size()) throw ShapeError("index order mismatch");
    dim_t off = 0;
    for (std::size_t k = 0; k < dims_.size(); ++k) {
      if (index[k] >= dims_[k]) throw ShapeError("index out of range");
      off = off * dims_[k] + index[k];
    }
    return off;
  }

  Dims dims_;
  std::vector<double> data_;
};

inline MixedVector vectorize(const Hypermatrix& a) {
  return MixedVector(a.values());
}

inline Hypermatrix devectorize(const MixedVector& v, Dims dims) {
  return Hypermatrix(std::move(dims), v.values());
}

namespace detail {

// Splits dims around `axis` into (product before, range, product after).
struct AxisSplit {
  dim_t outer;
  dim_t range;
  dim_t inner;
};

inline AxisSplit split_at(const Dims& dims, std::size_t axis) {
  AxisSplit s{1, dims[axis], 1};
  for (std::size_t i = 0; i < axis; ++i) s.outer *= dims[i];
  for (std::size_t i = axis + 1; i < dims.size(); ++i) s.inner *= dims[i];
  return s;
}

inline void require_axis(const Hypermatrix& a, std::size_t axis,
                         const char* who) {
  if (axis >= a.order()) {
    throw ShapeError(std::string(who) + ": axis " + std::to_string(axis) +
                     " out of range for order " + std::to_string(a.order()));
  }
}

}  // namespace detail

/// Contraction product pairing axis `s` of A with axis `t` of B:
///   c[..A without s.., ..B without t..] = sum_k a[..k..] b[..k..]
/// The result dims are A's dims without s followed by B's dims without t.
/// When both operands are order 1 the scalar result is returned with dims (1).
inline Hypermatrix contract(const Hypermatrix& a, std::size_t s,
                            const Hypermatrix& b, std::size_t t) {
  detail::require_axis(a, s, "contract");
  detail::require_axis(b, t, "contract");
  if (a.dims()[s] != b.dims()[t]) {
    throw ShapeError("contract: range " + std::to_string(a.dims()[s]) +
                     " does not match range " + std::to_string(b.dims()[t]));
  }
  const auto sa = detail::split_at(a.dims(), s);
  const auto sb = detail::split_at(b.dims(), t);

  Dims out_dims;
  for (std::size_t i = 0; i < a.order(); ++i)
    if (i != s) out_dims.push_back(a.dims()[i]);
  for (std::size_t i = 0; i < b.order(); ++i)
    if (i != t) out_dims.push_back(b.dims()[i]);
  if (out_dims.empty()) out_dims.push_back(1);

  const dim_t a_rest = sa.outer * sa.inner;
  const dim_t b_rest = sb.outer * sb.inner;
  std::vector<double> out(checked_mul(a_rest, b_rest), 0.0);
  const auto& av = a.values();
  const auto& bv = b.values();
  for (dim_t ao = 0; ao < sa.outer; ++ao) {
    for (dim_t ai = 0; ai < sa.inner; ++ai) {
      const dim_t arow = ao * sa.inner + ai;
      for (dim_t bo = 0; bo < sb.outer; ++bo) {
        for (dim_t bi = 0; bi < sb.inner; ++bi) {
          double acc = 0.0;
          for (dim_t k = 0; k < sa.range; ++k) {
            acc += av[(ao * sa.range + k) * sa.inner + ai] *
                   bv[(bo * sb.range + k) * sb.inner + bi];
          }
          out[arow * b_rest + bo * sb.inner + bi] = acc;
        }
      }
    }
  }
  return Hypermatrix(std::move(out_dims), std::move(out));
}

/// Applies M along one axis: the range n of that axis is replaced by
/// rows(M), and every fibre along the axis is multiplied by M. On the
/// vectorized form this is (I_before ⊗ M ⊗ I_after) V_A, computed with
/// strided loops instead of the Kronecker operator.
inline Hypermatrix apply_axis(const Hypermatrix& a, std::size_t axis,
                              const DenseMatrix& m) {
  detail::require_axis(a, axis, "apply_axis");
  if (m.cols() != a.dims()[axis]) {
    throw ShapeError("apply_axis: operator has " + std::to_string(m.cols()) +
                     " columns but axis " + std::to_string(axis) +
                     " has range " + std::to_string(a.dims()[axis]));
  }
  const auto sp = detail::split_at(a.dims(), axis);
  Dims out_dims = a.dims();
  out_dims[axis] = m.rows();
  std::vector<double> out(
      checked_mul(checked_mul(sp.outer, m.rows()), sp.inner), 0.0);
  const auto& av = a.values();
  for (dim_t o = 0; o < sp.outer; ++o) {
    for (dim_t r = 0; r < m.rows(); ++r) {
      double* dst = out.data() + (o * m.rows() + r) * sp.inner;
      for (dim_t k = 0; k < sp.range; ++k) {
        const double w = m(r, k);
        const double* src = av.data() + (o * sp.range + k) * sp.inner;
        for (dim_t q = 0; q < sp.inner; ++q) dst[q] += w * src[q];
      }
    }
  }
  return Hypermatrix(std::move(out_dims), std::move(out));
}

}  // namespace xdp
