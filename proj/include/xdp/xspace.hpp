#pragma once

// The mixed-dimension space: vectors of different dimensions are compared by
// embedding both into R^t, t = lcm of the dimensions, through one-vectors.

#include <algorithm>
#include <cmath>
#include <string>

#include "xdp/checked.hpp"
#include "xdp/matrix.hpp"

namespace xdp {

/// Irreducible representative of an equivalence class together with the
/// block length that was stripped from the input.
struct CanonicalVector {
  MixedVector rep;
  dim_t multiplicity;
};

/// Embeds x into R^t: x ⊗ J_{t/dim} (left) or J_{t/dim} ⊗ x (right).
/// t must be a multiple of x.dim().
inline MixedVector embed(const MixedVector& x, dim_t t, Side side) {
  if (t == 0 || t % x.dim() != 0) {
    throw ShapeError("embed: " + std::to_string(t) +
                     " is not a multiple of " + std::to_string(x.dim()));
  }
  const dim_t block = t / x.dim();
  std::vector<double> out(t);
  for (dim_t i = 0; i < t; ++i) {
    out[i] = side == Side::Left ? x[i / block] : x[i % x.dim()];
  }
  return MixedVector(std::move(out));
}

namespace detail {

inline double entry_at(const MixedVector& x, dim_t i, dim_t t, Side side) {
  return side == Side::Left ? x[i / (t / x.dim())] : x[i % x.dim()];
}

template <class Op>
MixedVector combine(const MixedVector& x, const MixedVector& y, Side side,
                    Op op) {
  const dim_t t = checked_lcm(x.dim(), y.dim());
  std::vector<double> out(t);
  for (dim_t i = 0; i < t; ++i) {
    out[i] = op(entry_at(x, i, t, side), entry_at(y, i, t, side));
  }
  return MixedVector(std::move(out));
}

inline bool is_integer_valued(const MixedVector& x) {
  return std::all_of(x.begin(), x.end(),
                     [](double v) { return v == std::nearbyint(v); });
}

inline double max_abs(const MixedVector& x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

// Exact for integer data, 1e-9 * max(1, |x|_inf) otherwise.
inline double equivalence_tolerance(const MixedVector& x) {
  if (is_integer_valued(x)) return 0.0;
  return 1e-9 * std::max(1.0, max_abs(x));
}

}  // namespace detail

inline MixedVector xadd(const MixedVector& x, const MixedVector& y,
                        Side side = Side::Left) {
  return detail::combine(x, y, side, [](double a, double b) { return a + b; });
}

inline MixedVector xsub(const MixedVector& x, const MixedVector& y,
                        Side side = Side::Left) {
  return detail::combine(x, y, side, [](double a, double b) { return a - b; });
}

inline MixedVector xscale(double r, const MixedVector& x) {
  if (!std::isfinite(r)) throw ParseError("xscale: non-finite scalar");
  std::vector<double> out(x.values());
  for (double& v : out) v *= r;
  return MixedVector(std::move(out));
}

/// Smallest z and largest b with x = z ⊗ J_b (left) or x = J_b ⊗ z (right).
/// Divisors of dim(x) are tried from the largest down; the first block length
/// whose test passes yields an irreducible z directly.
inline CanonicalVector canonical(const MixedVector& x, Side side = Side::Left) {
  const dim_t n = x.dim();
  const double tol = detail::equivalence_tolerance(x);
  for (dim_t b = n; b > 1; --b) {
    if (n % b != 0) continue;
    const dim_t len = n / b;
    bool ok = true;
    for (dim_t i = 0; i < n && ok; ++i) {
      const double ref = side == Side::Left ? x[(i / b) * b] : x[i % len];
      ok = std::abs(x[i] - ref) <= tol;
    }
    if (!ok) continue;
    std::vector<double> z(len);
    for (dim_t k = 0; k < len; ++k) z[k] = side == Side::Left ? x[k * b] : x[k];
    return {MixedVector(std::move(z)), b};
  }
  return {x, 1};
}

inline bool equivalent(const MixedVector& x, const MixedVector& y,
                       Side side = Side::Left) {
  const CanonicalVector cx = canonical(x, side);
  const CanonicalVector cy = canonical(y, side);
  if (cx.rep.dim() != cy.rep.dim()) return false;
  const double tol = std::max(detail::equivalence_tolerance(x),
                              detail::equivalence_tolerance(y));
  for (dim_t i = 0; i < cx.rep.dim(); ++i) {
    if (std::abs(cx.rep[i] - cy.rep[i]) > tol) return false;
  }
  return true;
}

/// (1/t) <embed(x), embed(y)>, t = lcm(dim x, dim y).
inline double xinner(const MixedVector& x, const MixedVector& y,
                     Side side = Side::Left) {
  const dim_t t = checked_lcm(x.dim(), y.dim());
  double acc = 0.0;
  for (dim_t i = 0; i < t; ++i) {
    acc += detail::entry_at(x, i, t, side) * detail::entry_at(y, i, t, side);
  }
  return acc / static_cast<double>(t);
}

/// sqrt(x^T x / n). Embedding by one-vectors keeps the mean of squares, so
/// the norm does not depend on the side.
inline double xnorm(const MixedVector& x) {
  double acc = 0.0;
  for (double v : x) acc += v * v;
  return std::sqrt(acc / static_cast<double>(x.dim()));
}

inline double xdist(const MixedVector& x, const MixedVector& y,
                    Side side = Side::Left) {
  return xnorm(xsub(x, y, side));
}

/// Angle in [0, pi] from the cross-dimensional inner product.
inline double xangle(const MixedVector& x, const MixedVector& y,
                     Side side = Side::Left) {
  const double nx = xnorm(x);
  const double ny = xnorm(y);
  if (nx == 0.0 || ny == 0.0) {
    throw DegenerateError("xangle: zero-norm operand");
  }
  const double c = xinner(x, y, side) / (nx * ny);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

}  // namespace xdp
