#pragma once

// Compressed-sensing quantities used to compare against projection coding:
// spark, mutual coherence, the coherence-based sparsity bound, and the
// STP measurement operator y = A0 ⋉ x.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/SVD>

#include "xdp/matrix.hpp"
#include "xdp/stp.hpp"

namespace xdp {

/// Largest column count for which spark() runs its exhaustive search.
inline constexpr dim_t kSparkSearchLimit = 20;

/// Sensing matrix A (m×n). Columns must be nonzero; m >= n is allowed but
/// flagged by overdetermined().
class SensingMatrix {
 public:
  explicit SensingMatrix(DenseMatrix a) : a_(std::move(a)) {
    for (dim_t j = 0; j < a_.cols(); ++j) {
      bool zero = true;
      for (dim_t i = 0; i < a_.rows() && zero; ++i) zero = a_(i, j) == 0.0;
      if (zero) {
        throw DegenerateError("sensing matrix column " + std::to_string(j) +
                              " is zero");
      }
    }
  }

  const DenseMatrix& matrix() const { return a_; }
  dim_t rows() const { return a_.rows(); }
  dim_t cols() const { return a_.cols(); }
  bool overdetermined() const { return a_.rows() >= a_.cols(); }

 private:
  DenseMatrix a_;
};

/// Smallest number of linearly dependent columns; empty when every column
/// subset is independent.
struct Spark {
  std::optional<dim_t> value;

  bool infinite() const { return !value.has_value(); }
  friend bool operator==(const Spark&, const Spark&) = default;
};

inline std::string to_string(const Spark& s) {
  return s.infinite() ? "inf" : std::to_string(*s.value);
}

struct CsSummary {
  std::optional<Spark> spark;  // empty when the search bound is exceeded
  double coherence;
  double sparsity_bound;                   // +inf when coherence is 0
  std::optional<dim_t> max_guaranteed_k;   // empty when unbounded
};

struct KronInvarianceReport {
  dim_t s;
  std::optional<Spark> spark_a;     // empty when n*s exceeds the spark bound
  std::optional<Spark> spark_kron;
  double mu_a;
  double mu_kron;
};

namespace detail {

inline Eigen::MatrixXd to_eigen(const DenseMatrix& a) {
  Eigen::MatrixXd m(a.rows(), a.cols());
  for (dim_t i = 0; i < a.rows(); ++i)
    for (dim_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  return m;
}

}  // namespace detail

/// Number of singular values above 1e-9 * sigma_max.
inline dim_t numeric_rank(const DenseMatrix& a) {
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(detail::to_eigen(a));
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double thresh = 1e-9 * sv(0);
  dim_t r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) r += sv(i) > thresh ? 1 : 0;
  return r;
}

/// Exhaustive search by increasing subset size. Any rank(A)+1 columns are
/// dependent, so the search stops there at the latest.
inline Spark spark(const SensingMatrix& a) {
  const dim_t n = a.cols();
  if (n > kSparkSearchLimit) {
    throw CapacityError("spark: " + std::to_string(n) +
                        " columns exceed the exhaustive search bound of " +
                        std::to_string(kSparkSearchLimit));
  }
  const dim_t rank = numeric_rank(a.matrix());
  if (rank == n) return {};
  for (dim_t k = 1; k <= rank; ++k) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    std::vector<dim_t> cols(k);
    do {
      for (dim_t j = 0, c = 0; j < n; ++j)
        if (pick[j]) cols[c++] = j;
      if (numeric_rank(a.matrix().column_subset(cols)) < k) return {k};
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return {rank + 1};
}

/// max_{i != j} |<a_i, a_j>| / (|a_i| |a_j|), clamped to [0, 1]. A matrix
/// with a single column has coherence 0. Cosines within a few ulps of 1
/// are taken as 1 so parallel columns do not inflate the recovery bound.
inline double coherence(const SensingMatrix& a) {
  const DenseMatrix& m = a.matrix();
  std::vector<double> sq(m.cols(), 0.0);
  for (dim_t j = 0; j < m.cols(); ++j)
    for (dim_t i = 0; i < m.rows(); ++i) sq[j] += m(i, j) * m(i, j);
  double mu = 0.0;
  for (dim_t p = 0; p < m.cols(); ++p) {
    for (dim_t q = p + 1; q < m.cols(); ++q) {
      double dot = 0.0;
      for (dim_t i = 0; i < m.rows(); ++i) dot += m(i, p) * m(i, q);
      mu = std::max(mu, std::abs(dot) / std::sqrt(sq[p] * sq[q]));
    }
  }
  if (mu >= 1.0 - 4 * std::numeric_limits<double>::epsilon()) return 1.0;
  return mu;
}

/// Sparsity k is recoverable when k < (1 + 1/mu) / 2.
inline CsSummary recovery_bound(const SensingMatrix& a) {
  CsSummary out{};
  if (a.cols() <= kSparkSearchLimit) out.spark = spark(a);
  out.coherence = coherence(a);
  if (out.coherence == 0.0) {
    out.sparsity_bound = std::numeric_limits<double>::infinity();
    return out;
  }
  out.sparsity_bound = 0.5 * (1.0 + 1.0 / out.coherence);
  // Past 2^53 the bound no longer distinguishes integers.
  if (out.sparsity_bound < 9007199254740992.0) {
    out.max_guaranteed_k = static_cast<dim_t>(std::ceil(out.sparsity_bound)) - 1;
  }
  return out;
}

/// y = A0 ⋉ x (left matrix-vector STP).
inline MixedVector stp_measure(const DenseMatrix& a0, const MixedVector& x) {
  return stp_mv(a0, x, Side::Left);
}

/// Dense matrix S with S x = stp_measure(a0, x) for x of dimension p:
/// (A0 ⊗ I_{t/n}) (I_p ⊗ J_{t/p}), t = lcm(n, p).
inline DenseMatrix effective_sensing_matrix(const DenseMatrix& a0, dim_t p) {
  const dim_t t = checked_lcm(a0.cols(), p);
  const dim_t reps = t / p;
  DenseMatrix spread(t, p);
  for (dim_t i = 0; i < t; ++i) spread(i, i / reps) = 1.0;
  return matmul(detail::pad_identity(a0, t / a0.cols(), Side::Left), spread);
}

/// Number of nonzero entries.
inline dim_t l0_norm(const MixedVector& x) {
  return static_cast<dim_t>(
      std::count_if(x.begin(), x.end(), [](double v) { return v != 0.0; }));
}

/// spark and coherence of A next to those of A ⊗ I_s.
inline KronInvarianceReport kron_invariance_report(const SensingMatrix& a,
                                                   dim_t s) {
  if (s == 0) throw InvalidDimensionError("kron_invariance_report: s = 0");
  const SensingMatrix big(kron(a.matrix(), DenseMatrix::identity(s)));
  KronInvarianceReport r{s, std::nullopt, std::nullopt, coherence(a),
                         coherence(big)};
  if (big.cols() <= kSparkSearchLimit) {
    r.spark_a = spark(a);
    r.spark_kron = spark(big);
  }
  return r;
}

}  // namespace xdp
