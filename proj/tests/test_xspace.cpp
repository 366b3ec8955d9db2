#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "support/oracles.hpp"
#include "support/random.hpp"
#include "xdp/stp.hpp"
#include "xdp/xspace.hpp"

using namespace xdp;
using testing_support::Gen;

namespace {

MixedVector expand(const MixedVector& x, dim_t b, Side s) {
  return s == Side::Left ? kron(x, one_vector(b)) : kron(one_vector(b), x);
}

double rel(double a, double b) {
  return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

// Largest divisor b of n with x = z ⊗ J_b (left) or J_b ⊗ z (right), by
// rebuilding every candidate and comparing.
dim_t brute_multiplicity(const MixedVector& x, Side s) {
  dim_t best = 1;
  for (dim_t b = 1; b <= x.dim(); ++b) {
    if (x.dim() % b) continue;
    std::vector<double> z(x.dim() / b);
    for (dim_t k = 0; k < z.size(); ++k) z[k] = s == Side::Left ? x[k * b] : x[k];
    if (expand(MixedVector(z), b, s) == x) best = b;
  }
  return best;
}

}  // namespace

TEST(XAdd, Examples) {
  EXPECT_EQ(xadd({1, 2}, {1, 1, 1}, Side::Left), (MixedVector{2, 2, 2, 3, 3, 3}));
  EXPECT_EQ(xadd({1, 2}, {1, 1, 1}, Side::Right), (MixedVector{2, 3, 2, 3, 2, 3}));
  EXPECT_EQ(xadd({1, 2, 3}, {0, 0, 0}), (MixedVector{1, 2, 3}));
}

TEST(XAdd, MatchesOneVectorExpansion) {
  Gen g(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = g.vec(g.dim(1, 6));
    const auto y = g.vec(g.dim(1, 6));
    const Side s = g.side();
    const dim_t t = std::lcm(x.dim(), y.dim());
    const auto ex = expand(x, t / x.dim(), s);
    const auto ey = expand(y, t / y.dim(), s);
    const auto sum = xadd(x, y, s);
    const auto diff = xsub(x, y, s);
    ASSERT_EQ(sum.dim(), t);
    for (dim_t i = 0; i < t; ++i) {
      EXPECT_EQ(sum[i], ex[i] + ey[i]);
      EXPECT_EQ(diff[i], ex[i] - ey[i]);
    }
  }
}

TEST(XScale, Examples) {
  EXPECT_EQ(xscale(2, {1, 2}), (MixedVector{2, 4}));
  EXPECT_EQ(xscale(0, {1, 2, 3}), (MixedVector{0, 0, 0}));
  EXPECT_EQ(xscale(-1, {1, -1}), (MixedVector{-1, 1}));
  EXPECT_THROW(xscale(std::nan(""), {1}), ParseError);
}

TEST(Canonical, Examples) {
  auto c = canonical({2, 2, 2, 3, 3, 3}, Side::Left);
  EXPECT_EQ(c.rep, (MixedVector{2, 3}));
  EXPECT_EQ(c.multiplicity, 3u);
  c = canonical({1, 2, 3}, Side::Left);
  EXPECT_EQ(c.rep, (MixedVector{1, 2, 3}));
  EXPECT_EQ(c.multiplicity, 1u);
  c = canonical({1, 2, 1, 2}, Side::Right);
  EXPECT_EQ(c.rep, (MixedVector{1, 2}));
  EXPECT_EQ(c.multiplicity, 2u);
}

TEST(Canonical, AgreesWithDivisorSearchOnStructuredInputs) {
  Gen g(43);
  for (int trial = 0; trial < 200; ++trial) {
    // Small integer alphabet so accidental repetitions happen.
    std::vector<double> z(g.dim(1, 4));
    for (auto& v : z) v = static_cast<double>(g.dim(0, 2));
    const Side s = g.side();
    const auto x = expand(MixedVector(z), g.dim(1, 4), s);
    const auto c = canonical(x, s);
    EXPECT_EQ(c.multiplicity, brute_multiplicity(x, s));
    EXPECT_EQ(expand(c.rep, c.multiplicity, s), x);
  }
}

TEST(Canonical, Idempotent) {
  Gen g(47);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> z(g.dim(1, 5));
    for (auto& v : z) v = g.coin() ? g.uniform() : static_cast<double>(g.dim(0, 1));
    for (Side s : {Side::Left, Side::Right}) {
      const auto x = expand(MixedVector(z), g.dim(1, 4), s);
      EXPECT_EQ(canonical(canonical(x, s).rep, s).multiplicity, 1u);
    }
  }
}

TEST(Canonical, ToleratesRoundoffOnFloatingData) {
  const MixedVector x{0.1 + 0.2, 0.3, 0.7, 0.7};
  const auto c = canonical(x, Side::Left);
  EXPECT_EQ(c.multiplicity, 2u);
  EXPECT_EQ(c.rep.dim(), 2u);
}

TEST(Equivalent, Examples) {
  EXPECT_TRUE(equivalent({1, 2}, {1, 1, 2, 2}, Side::Left));
  EXPECT_FALSE(equivalent({1, 2}, {1, 2, 1, 2}, Side::Left));
  EXPECT_TRUE(equivalent({1, 2}, {1, 2, 1, 2}, Side::Right));
  EXPECT_TRUE(equivalent({1, 2}, {1, 2}, Side::Left));
  EXPECT_TRUE(equivalent({1, 2}, {1, 2}, Side::Right));
}

TEST(Equivalent, IsAnEquivalenceRelation) {
  Gen g(53);
  for (int trial = 0; trial < 100; ++trial) {
    const auto z = g.vec(g.dim(1, 4));
    const Side s = g.side();
    const auto x = expand(z, g.dim(1, 3), s);
    const auto y = expand(z, g.dim(1, 3), s);
    const auto w = expand(z, g.dim(1, 3), s);
    EXPECT_TRUE(equivalent(x, x, s));
    EXPECT_EQ(equivalent(x, y, s), equivalent(y, x, s));
    EXPECT_TRUE(equivalent(x, y, s) && equivalent(y, w, s));
    EXPECT_TRUE(equivalent(x, w, s));
  }
}

TEST(XInner, Examples) {
  EXPECT_DOUBLE_EQ(xinner({1, 2}, {1, 1, 1}, Side::Left), 1.5);
  EXPECT_DOUBLE_EQ(xinner({1, 0}, {0, 1}, Side::Left), 0.0);
  EXPECT_DOUBLE_EQ(xinner({1, 2}, {1, 2}, Side::Left), 2.5);
}

TEST(XInner, MatchesExplicitEmbedding) {
  Gen g(59);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = g.vec(g.dim(1, 6));
    const auto y = g.vec(g.dim(1, 6));
    const Side s = g.side();
    const dim_t t = std::lcm(x.dim(), y.dim());
    const auto ex = expand(x, t / x.dim(), s);
    const auto ey = expand(y, t / y.dim(), s);
    double dot = 0.0;
    for (dim_t i = 0; i < t; ++i) dot += ex[i] * ey[i];
    EXPECT_NEAR(xinner(x, y, s), dot / double(t), 1e-12);
  }
}

TEST(XNorm, Examples) {
  EXPECT_NEAR(xnorm({1, 2}), std::sqrt(2.5), 1e-15);
  EXPECT_NEAR(xnorm({1, 2}), 1.5811388, 1e-7);
  EXPECT_NEAR(xnorm({1, 2}), std::sqrt(xinner({1, 2}, {1, 2})), 1e-15);
  EXPECT_EQ(xnorm({-4.25}), 4.25);
  EXPECT_EQ(xnorm({3, 3, 3}), 3.0);
}

TEST(XDist, Examples) {
  EXPECT_EQ(xdist({1, 2}, {1, 1, 2, 2}, Side::Left), 0.0);
  EXPECT_DOUBLE_EQ(xdist({1, 2}, {3, 4}), 2.0);
  EXPECT_NEAR(xdist({1, 2}, {1, 1, 1}, Side::Left), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(XDist, ZeroWithoutEqualityWitness) {
  // x != y, yet they are at distance zero.
  const MixedVector z{0.25, -1.5, 3.0};
  for (Side s : {Side::Left, Side::Right}) {
    const auto x2 = expand(z, 2, s);
    EXPECT_NE(z, x2);
    EXPECT_EQ(xdist(z, x2, s), 0.0);
  }
}

TEST(XDist, ZeroIffEquivalent) {
  Gen g(61);
  for (int trial = 0; trial < 100; ++trial) {
    const Side s = g.side();
    const auto z = g.vec(g.dim(1, 4));
    const auto x = expand(z, g.dim(1, 3), s);
    const auto y = expand(z, g.dim(1, 3), s);
    EXPECT_TRUE(equivalent(x, y, s));
    EXPECT_LE(xdist(x, y, s), 1e-15);
    const auto w = g.vec(g.dim(1, 6));
    EXPECT_EQ(xdist(x, w, s) <= 1e-12, equivalent(x, w, s));
  }
}

TEST(XSpaceProperties, EquivalenceConsistency) {
  Gen g(67);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = g.vec(g.dim(1, 5));
    const auto y = g.vec(g.dim(1, 5));
    const auto xe = expand(x, g.dim(1, 4), Side::Left);
    const auto ye = expand(y, g.dim(1, 4), Side::Left);
    EXPECT_LE(rel(xinner(x, y, Side::Left), xinner(xe, ye, Side::Left)), 1e-12);
    EXPECT_LE(rel(xnorm(x), xnorm(xe)), 1e-12);
    EXPECT_LE(rel(xdist(x, y, Side::Left), xdist(xe, ye, Side::Left)), 1e-12);
  }
}

TEST(XSpaceProperties, SameDimensionDistanceIsScaledEuclidean) {
  Gen g(71);
  for (dim_t n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto x = g.vec(n);
      const auto y = g.vec(n);
      double d2 = 0.0;
      for (dim_t i = 0; i < n; ++i) d2 += (x[i] - y[i]) * (x[i] - y[i]);
      for (Side s : {Side::Left, Side::Right}) {
        EXPECT_NEAR(xdist(x, y, s), std::sqrt(d2) / std::sqrt(double(n)), 1e-12);
      }
    }
  }
}

TEST(XSpaceProperties, TriangleInequality) {
  Gen g(73);
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = g.vec(g.dim(1, 6));
    const auto y = g.vec(g.dim(1, 6));
    const auto z = g.vec(g.dim(1, 6));
    const Side s = g.side();
    EXPECT_LE(xdist(x, z, s), xdist(x, y, s) + xdist(y, z, s) + 1e-12);
  }
}

TEST(XAngle, Examples) {
  EXPECT_NEAR(xangle({1, 0}, {1, 1}), std::numbers::pi / 4, 1e-15);
  EXPECT_NEAR(xangle({1, 2}, {2, 4}), 0.0, 1e-7);
  EXPECT_NEAR(xangle({1, 0}, {0, 1}), std::numbers::pi / 2, 1e-15);
  EXPECT_THROW(xangle({0, 0}, {1, 1}), DegenerateError);
  EXPECT_THROW(xangle({1, 1}, {0}), DegenerateError);
}

TEST(XAngle, AlwaysInRange) {
  Gen g(79);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = g.vec(g.dim(1, 6));
    const auto y = g.coin() ? xscale(g.uniform(-3, 3), x) : g.vec(g.dim(1, 6));
    if (xnorm(y) == 0.0) continue;
    const double th = xangle(x, y, g.side());
    EXPECT_GE(th, 0.0);
    EXPECT_LE(th, std::numbers::pi);
  }
}
