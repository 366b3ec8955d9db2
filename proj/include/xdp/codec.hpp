#pragma once

// Projection-based compression and decompression of 1-D, 2-D and order-d
// signals.
//
// The production path applies one projector per axis with strided loops.
// The staged Kronecker path multiplies the vectorized signal by one
// materialized Kronecker stage per axis (last axis first) and is kept as a
// reference implementation for tests.

#include <cmath>
#include <string>
#include <vector>

#include "xdp/hypermatrix.hpp"
#include "xdp/projection.hpp"
#include "xdp/stp.hpp"
#include "xdp/xspace.hpp"

namespace xdp {

struct CodecSpec {
  Dims source_dims;
  Dims target_dims;
  Side side = Side::Left;

  void validate() const {
    if (source_dims.empty() || source_dims.size() != target_dims.size()) {
      throw InvalidDimensionError(
          "codec spec: source " + dims_to_string(source_dims) + " and target " +
          dims_to_string(target_dims) + " must have the same nonzero order");
    }
    for (std::size_t i = 0; i < source_dims.size(); ++i) {
      if (source_dims[i] == 0 || target_dims[i] == 0) {
        throw InvalidDimensionError("codec spec: dimensions must be positive");
      }
    }
  }

  double compression_ratio() const {
    return static_cast<double>(checked_product(target_dims)) /
           static_cast<double>(checked_product(source_dims));
  }
};

struct RoundTripReport {
  double l2_error;
  double dv_error;
  double rmse;
  double compression_ratio;
};

struct RoundTrip {
  Hypermatrix compressed;
  Hypermatrix recovered;
  RoundTripReport report;
};

inline MixedVector compress_1d(const MixedVector& x, dim_t m,
                               Side side = Side::Left) {
  return project(x, m, side);
}

inline MixedVector decompress_1d(const MixedVector& y, dim_t n,
                                 Side side = Side::Left) {
  return project(y, n, side);
}

/// B = P_rows A P_cols^T with P the projectors from A's shape to (rows, cols).
inline DenseMatrix compress_2d(const DenseMatrix& a, dim_t rows, dim_t cols,
                               Side side = Side::Left) {
  const auto pr = cached_projector(a.rows(), rows, side);
  const auto pc = cached_projector(a.cols(), cols, side);
  return matmul(matmul(pr->matrix, a), pc->matrix.transpose());
}

inline DenseMatrix decompress_2d(const DenseMatrix& b, dim_t rows, dim_t cols,
                                 Side side = Side::Left) {
  return compress_2d(b, rows, cols, side);
}

namespace detail {

inline Hypermatrix project_axes(const Hypermatrix& a, const Dims& from,
                                const Dims& to, Side side) {
  if (a.dims() != from) {
    throw ShapeError("codec: signal dims " + dims_to_string(a.dims()) +
                     " do not match " + dims_to_string(from));
  }
  Hypermatrix out = a;
  for (std::size_t axis = 0; axis < from.size(); ++axis) {
    if (from[axis] == to[axis]) continue;
    out = apply_axis(out, axis,
                     cached_projector(from[axis], to[axis], side)->matrix);
  }
  return out;
}

// Stages (I_{from^{<i}} ⊗ P_i ⊗ I_{to^{>i}}) in application order,
// i = d-1 down to 0. Their product maps V_A to V_B.
inline std::vector<DenseMatrix> staged_factors(const Dims& from, const Dims& to,
                                               Side side) {
  const std::size_t d = from.size();
  std::vector<DenseMatrix> stages;
  stages.reserve(d);
  for (std::size_t i = d; i-- > 0;) {
    dim_t before = 1;
    dim_t after = 1;
    for (std::size_t j = 0; j < i; ++j) before = checked_mul(before, from[j]);
    for (std::size_t j = i + 1; j < d; ++j) after = checked_mul(after, to[j]);
    stages.push_back(kron(kron(DenseMatrix::identity(before),
                               projector(from[i], to[i], side).matrix),
                          DenseMatrix::identity(after)));
  }
  return stages;
}

inline DenseMatrix staged_operator(const Dims& from, const Dims& to,
                                   Side side) {
  const auto stages = staged_factors(from, to, side);
  DenseMatrix op = stages.front();
  for (std::size_t k = 1; k < stages.size(); ++k) op = matmul(stages[k], op);
  return op;
}

inline MixedVector apply_stages(const Dims& from, const Dims& to, Side side,
                                MixedVector v) {
  for (const DenseMatrix& stage : staged_factors(from, to, side)) {
    v = matvec(stage, v);
  }
  return v;
}

}  // namespace detail

/// Compresses A (dims = spec.source_dims) to spec.target_dims, axis by axis
/// in ascending order.
inline Hypermatrix compress_nd(const Hypermatrix& a, const CodecSpec& spec) {
  spec.validate();
  return detail::project_axes(a, spec.source_dims, spec.target_dims,
                              spec.side);
}

inline Hypermatrix decompress_nd(const Hypermatrix& b, const CodecSpec& spec) {
  spec.validate();
  return detail::project_axes(b, spec.target_dims, spec.source_dims,
                              spec.side);
}

/// Dense operator mapping V_A to V_B for the compression direction.
inline DenseMatrix compression_operator(const CodecSpec& spec) {
  spec.validate();
  return detail::staged_operator(spec.source_dims, spec.target_dims,
                                 spec.side);
}

inline DenseMatrix decompression_operator(const CodecSpec& spec) {
  spec.validate();
  return detail::staged_operator(spec.target_dims, spec.source_dims,
                                 spec.side);
}

/// Same result as compress_nd, through the staged Kronecker operator.
/// Each stage is materialized, so memory is quadratic in the signal size.
inline Hypermatrix compress_nd_kronecker(const Hypermatrix& a,
                                         const CodecSpec& spec) {
  if (a.dims() != spec.source_dims) {
    throw ShapeError("codec: signal dims " + dims_to_string(a.dims()) +
                     " do not match " + dims_to_string(spec.source_dims));
  }
  spec.validate();
  return devectorize(detail::apply_stages(spec.source_dims, spec.target_dims,
                                          spec.side, vectorize(a)),
                     spec.target_dims);
}

inline Hypermatrix decompress_nd_kronecker(const Hypermatrix& b,
                                           const CodecSpec& spec) {
  if (b.dims() != spec.target_dims) {
    throw ShapeError("codec: signal dims " + dims_to_string(b.dims()) +
                     " do not match " + dims_to_string(spec.target_dims));
  }
  spec.validate();
  return devectorize(detail::apply_stages(spec.target_dims, spec.source_dims,
                                          spec.side, vectorize(b)),
                     spec.source_dims);
}

inline RoundTrip roundtrip(const Hypermatrix& a, const CodecSpec& spec) {
  Hypermatrix compressed = compress_nd(a, spec);
  Hypermatrix recovered = decompress_nd(compressed, spec);
  const MixedVector va = vectorize(a);
  const MixedVector vr = vectorize(recovered);
  double sq = 0.0;
  for (dim_t i = 0; i < va.dim(); ++i) {
    const double diff = vr[i] - va[i];
    sq += diff * diff;
  }
  const double l2 = std::sqrt(sq);
  RoundTripReport report{
      l2, xdist(vr, va, spec.side),
      l2 / std::sqrt(static_cast<double>(va.dim())), spec.compression_ratio()};
  return {std::move(compressed), std::move(recovered), report};
}

}  // namespace xdp
