#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "npo/lgl_grid.hpp"
#include "oracles.hpp"

namespace {

TEST(LegendreEval, EndpointNormalization) {
  for (int n = 0; n <= 60; ++n) {
    EXPECT_DOUBLE_EQ(npo::legendre_eval(n, 1.0).p, 1.0) << n;
    EXPECT_DOUBLE_EQ(std::abs(npo::legendre_eval(n, -1.0).p), 1.0) << n;
  }
}

TEST(LegendreEval, ClosedFormsLowDegree) {
  // P_2 = (3x^2 - 1)/2, P'_3 = (15x^2 - 3)/2
  EXPECT_DOUBLE_EQ(npo::legendre_eval(2, 0.0).p, -0.5);
  for (double x : {-0.9, -0.3, 0.2, 0.75}) {
    EXPECT_NEAR(npo::legendre_eval(2, x).p, (3 * x * x - 1) / 2, 1e-15);
    EXPECT_NEAR(npo::legendre_eval(3, x).dp, (15 * x * x - 3) / 2, 1e-14);
  }
  EXPECT_NEAR(npo::legendre_eval(3, 1.0 / std::sqrt(5.0)).dp, 0.0, 1e-15);
}

TEST(LegendreEval, DerivativeAtEndpoints) {
  // P'_N(1) = N(N+1)/2
  for (int n : {1, 5, 20, 200})
    EXPECT_DOUBLE_EQ(npo::legendre_eval(n, 1.0).dp, n * (n + 1) / 2.0);
}

TEST(LglNodes, SmallOrders) {
  const auto g2 = npo::lgl_nodes(2);
  ASSERT_EQ(g2.nodes.size(), 3u);
  EXPECT_EQ(g2.nodes[0], -1.0);
  EXPECT_EQ(g2.nodes[1], 0.0);
  EXPECT_EQ(g2.nodes[2], 1.0);

  const auto g3 = npo::lgl_nodes(3);
  const double s = 1.0 / std::sqrt(5.0);
  ASSERT_EQ(g3.nodes.size(), 4u);
  EXPECT_NEAR(g3.nodes[1], -s, 1e-15);
  EXPECT_NEAR(g3.nodes[2], s, 1e-15);
  EXPECT_NEAR(g3.nodes[1], -0.4472135955, 1e-10);
}

TEST(LglNodes, RejectsOrderBelowTwo) {
  EXPECT_THROW(npo::lgl_nodes(1), npo::DomainError);
}

TEST(LglNodes, WorkingOrder) {
  const auto g = npo::lgl_nodes(200);
  ASSERT_EQ(g.nodes.size(), 201u);
  const double sum = std::accumulate(g.weights.begin(), g.weights.end(), 0.0);
  EXPECT_NEAR(sum, 2.0, 1e-13);
}

TEST(LglNodes, StructuralInvariantsForAllOrders) {
  for (int n = 2; n <= 256; ++n) {
    const auto g = npo::lgl_nodes(n);
    ASSERT_EQ(g.size(), n + 1);
    EXPECT_EQ(g.nodes.front(), -1.0);
    EXPECT_EQ(g.nodes.back(), 1.0);
    double sum = 0.0;
    for (int j = 0; j <= n; ++j) {
      EXPECT_EQ(g.nodes[j], -g.nodes[n - j]) << "n=" << n << " j=" << j;
      if (j > 0) EXPECT_LT(g.nodes[j - 1], g.nodes[j]) << "n=" << n;
      if (j > 0 && j < n) {
        // Rounding the node to double leaves |P'_N| ~ eps |P''_N|, which
        // exceeds 1e-12 in absolute terms beyond N ~ 30.
        const double dp = std::abs(npo::legendre_eval(n, g.nodes[j]).dp);
        if (n <= 30) EXPECT_LT(dp, 1e-12) << "n=" << n << " j=" << j;
        EXPECT_LT(dp / (n * (n + 1) / 2.0), 1e-12) << "n=" << n << " j=" << j;
      }
      EXPECT_GT(g.weights[j], 0.0);
      sum += g.weights[j];
    }
    EXPECT_NEAR(sum, 2.0, 1e-13) << "n=" << n;
  }
}

TEST(LglNodes, RootsBracketedToMachinePrecision) {
  for (int n : {7, 31, 64, 127, 200, 256}) {
    const auto g = npo::lgl_nodes(n);
    for (int j = 1; j < n; ++j) {
      const double x = g.nodes[j];
      const long double lo = npo::oracle::legendre_dp_long(n, x - 4.5e-16L);
      const long double hi = npo::oracle::legendre_dp_long(n, x + 4.5e-16L);
      EXPECT_LT(lo * hi, 0.0L) << "n=" << n << " j=" << j;
    }
  }
}

TEST(LglNodes, QuadratureExactness) {
  for (int n : {2, 3, 8, 17, 64, 200}) {
    const auto g = npo::lgl_nodes(n);
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double s = 0.0;
      for (int j = 0; j <= n; ++j) s += g.weights[j] * std::pow(g.nodes[j], k);
      const double exact = (k % 2 == 1) ? 0.0 : 2.0 / (k + 1);
      if (exact == 0.0)
        EXPECT_NEAR(s, 0.0, 1e-13) << "n=" << n << " k=" << k;
      else
        EXPECT_NEAR(s / exact, 1.0, 1e-12) << "n=" << n << " k=" << k;
    }
  }
}

}  // namespace
