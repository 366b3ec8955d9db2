#pragma once

// Cross-dimensional projection. The projector from R^m onto R^n is the n×m
// matrix whose application gives the d_V-nearest point of R^n.

#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <tuple>

#include "xdp/checked.hpp"
#include "xdp/matrix.hpp"

namespace xdp {

struct Projector {
  dim_t from_dim;
  dim_t to_dim;
  Side side;
  DenseMatrix matrix;  // to_dim × from_dim
};

/// Builds the projector from R^m onto R^n.
///
/// Left: entry (i, j) is (n/t) times the overlap of the integer intervals
/// [i t/n, (i+1) t/n) and [j t/m, (j+1) t/m), so each output entry is a
/// box average of the piecewise-constant signal x ⊗ J_{t/m}.
///
/// Right: entry (i, j) is (n/t) times the number of c in [0, t) with
/// c ≡ i (mod n) and c ≡ j (mod m), which is 1 when i ≡ j (mod gcd(m, n))
/// and 0 otherwise.
///
/// Overlaps are exact integers; each entry is divided once.
inline Projector projector(dim_t m, dim_t n, Side side = Side::Left) {
  if (m == 0 || n == 0) {
    throw InvalidDimensionError("projector: dimensions must be positive");
  }
  const dim_t t = checked_lcm(m, n);
  DenseMatrix p(n, m);
  const double td = static_cast<double>(t);
  if (side == Side::Left) {
    const dim_t out_w = t / n;
    const dim_t in_w = t / m;
    for (dim_t i = 0; i < n; ++i) {
      const dim_t lo = i * out_w;
      const dim_t hi = lo + out_w;
      // Only input intervals intersecting [lo, hi) contribute.
      for (dim_t j = lo / in_w; j < m && j * in_w < hi; ++j) {
        const dim_t overlap =
            std::min(hi, (j + 1) * in_w) - std::max(lo, j * in_w);
        p(i, j) = static_cast<double>(overlap * n) / td;
      }
    }
  } else {
    const dim_t g = std::gcd(m, n);
    const double w = static_cast<double>(n) / td;
    for (dim_t i = 0; i < n; ++i)
      for (dim_t j = i % g; j < m; j += g) p(i, j) = w;
  }
  return {m, n, side, std::move(p)};
}

/// Bounded LRU memo of projectors keyed by (m, n, side). Entries are built
/// outside the lock and published whole, so readers never observe a partial
/// projector.
class ProjectorCache {
 public:
  explicit ProjectorCache(std::size_t capacity = 256) : capacity_(capacity) {}

  std::shared_ptr<const Projector> get(dim_t m, dim_t n, Side side) {
    const Key key{m, n, side};
    {
      std::lock_guard lock(mu_);
      if (auto it = index_.find(key); it != index_.end()) {
        order_.splice(order_.begin(), order_, it->second);
        return it->second->second;
      }
    }
    auto built = std::make_shared<const Projector>(projector(m, n, side));
    std::lock_guard lock(mu_);
    if (auto it = index_.find(key); it != index_.end()) {
      order_.splice(order_.begin(), order_, it->second);
      return it->second->second;
    }
    order_.emplace_front(key, built);
    index_[key] = order_.begin();
    if (order_.size() > capacity_) {
      index_.erase(order_.back().first);
      order_.pop_back();
    }
    return built;
  }

  std::size_t size() const {
    std::lock_guard lock(mu_);
    return order_.size();
  }

  std::size_t capacity() const { return capacity_; }

 private:
  using Key = std::tuple<dim_t, dim_t, Side>;
  using Entry = std::pair<Key, std::shared_ptr<const Projector>>;

  std::size_t capacity_;
  mutable std::mutex mu_;
  std::list<Entry> order_;
  std::map<Key, std::list<Entry>::iterator> index_;
};

inline ProjectorCache& default_projector_cache() {
  static ProjectorCache cache;
  return cache;
}

inline std::shared_ptr<const Projector> cached_projector(dim_t m, dim_t n,
                                                         Side side) {
  return default_projector_cache().get(m, n, side);
}

/// Nearest point of R^n to x under d_V.
inline MixedVector project(const MixedVector& x, dim_t n,
                           Side side = Side::Left) {
  return matvec(cached_projector(x.dim(), n, side)->matrix, x);
}

}  // namespace xdp
