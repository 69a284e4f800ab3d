#include <gtest/gtest.h>

#include <random>

#include "polyadj/lp.hpp"

using namespace polyadj;
using polyadj::lp::minimize;

namespace {

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

}  // namespace

TEST(Simplex, SmallKnownProblem) {
  // min -x - y  s.t.  x + 2y + s1 = 4, 3x + y + s2 = 6  -> x = 8/5, y = 6/5.
  const auto sol = minimize({q(-1), q(-1), q(0), q(0)}, {{q(1), q(2), q(1), q(0)}, {q(3), q(1), q(0), q(1)}},
                            {q(4), q(6)});
  EXPECT_EQ(sol.value, q(-14, 5));
  EXPECT_EQ(sol.x[0], q(8, 5));
  EXPECT_EQ(sol.x[1], q(6, 5));
}

TEST(Simplex, InfeasibleAndUnbounded) {
  EXPECT_THROW(minimize({q(1)}, {{q(1)}, {q(2)}}, {q(1), q(1)}), lp::InfeasibleError);
  EXPECT_THROW(minimize({q(-1), q(0)}, {{q(1), q(-1)}}, {q(1)}), lp::UnboundedError);
}

TEST(Simplex, RedundantAndDegenerateRows) {
  // Duplicate equality rows and a degenerate vertex.
  const auto sol = minimize({q(1), q(2), q(0)}, {{q(1), q(1), q(1)}, {q(1), q(1), q(1)}, {q(1), q(0), q(0)}},
                            {q(1), q(1), q(0)});
  EXPECT_EQ(sol.value, q(0));
  EXPECT_EQ(sol.x[0], q(0));
  EXPECT_EQ(sol.x[1], q(0));
  EXPECT_EQ(sol.x[2], q(1));
}

TEST(Simplex, OptimumBeatsEveryEnumeratedVertex) {
  // Random 2-row problems: compare with brute force over all column pairs.
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<int> c(-5, 5), rhs(0, 6);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 4;
    std::vector<Rational> cost(n);
    std::vector<std::vector<Rational>> a(2, std::vector<Rational>(n));
    for (std::size_t j = 0; j < n; ++j) {
      cost[j] = c(rng);
      a[0][j] = c(rng);
      a[1][j] = 1;  // keeps the feasible set bounded
    }
    const std::vector<Rational> b{Rational(rhs(rng)), Rational(1)};
    std::optional<Rational> best;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        // Basic solutions on columns i, j.
        const Rational det = a[0][i] * a[1][j] - a[0][j] * a[1][i];
        std::vector<Rational> x(n);
        if (i == j || det == 0) {
          if (a[1][i] == 0 || b[0] * a[1][i] != b[1] * a[0][i]) continue;
          x[i] = b[1] / a[1][i];
        } else {
          x[i] = (b[0] * a[1][j] - a[0][j] * b[1]) / det;
          x[j] = (a[0][i] * b[1] - b[0] * a[1][i]) / det;
        }
        if (x[i] < 0 || x[j] < 0) continue;
        Rational v = 0;
        for (std::size_t k = 0; k < n; ++k) v += cost[k] * x[k];
        if (!best || v < *best) best = v;
      }
    }
    if (!best) {
      EXPECT_THROW(minimize(cost, a, b), lp::InfeasibleError);
      continue;
    }
    const auto sol = minimize(cost, a, b);
    EXPECT_EQ(sol.value, *best);
    for (const auto& x : sol.x) EXPECT_GE(x, 0);
    for (int r = 0; r < 2; ++r) {
      Rational lhs = 0;
      for (std::size_t k = 0; k < n; ++k) lhs += a[r][k] * sol.x[k];
      EXPECT_EQ(lhs, b[r]);
    }
  }
}
