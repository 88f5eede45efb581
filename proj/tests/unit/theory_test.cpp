#include <gtest/gtest.h>

#include <cmath>

#include "mpga/theory.hpp"

namespace mpga::theory {
namespace {

// Closed form for a constant rate c.
double constant_rate_runtime(double c, double n, double chi) {
  return std::expm1(chi) / ((2.0 + c) * chi * chi) * n * n;
}

// Independent quadrature: composite trapezoid with one Richardson step.
template <typename F>
double richardson_trapezoid(F f, std::size_t intervals) {
  auto trap = [&](std::size_t k) {
    const double h = 1.0 / static_cast<double>(k);
    double s = 0.5 * (f(0.0) + f(1.0));
    for (std::size_t i = 1; i < k; ++i) s += f(static_cast<double>(i) * h);
    return s * h;
  };
  const double coarse = trap(intervals);
  const double fine = trap(2 * intervals);
  return fine + (fine - coarse) / 3.0;
}

TEST(EaRuntime, Examples) {
  EXPECT_NEAR(ea_runtime(1, 1), 0.85914, 1e-5);
  EXPECT_NEAR(ea_runtime(200, 1), 34365.6, 0.05);
  const double chi = 1e-6;
  const double series = 1.0 / (2.0 * chi) * (1.0 + chi / 2.0 + chi * chi / 6.0);
  EXPECT_NEAR(ea_runtime(1, chi) / series, 1.0, 1e-9);
}

TEST(RuntimeIntegral, ConstantRatesMatchClosedForm) {
  for (double c : {0.0, 0.5, 1.0, 3.0}) {
    for (double chi : {0.5, 1.0, 2.0}) {
      const double got = runtime_integral(RatePredicate::constant(c), 500, chi);
      const double want = constant_rate_runtime(c, 500, chi);
      EXPECT_LT(std::abs(got / want - 1.0), 1e-8) << "c=" << c << " chi=" << chi;
    }
  }
  EXPECT_NEAR(runtime_integral(RatePredicate::constant(1.0), 1, 1), std::expm1(1.0) / 3.0, 1e-10);
  EXPECT_NEAR(runtime_integral(RatePredicate::constant(0.0), 300, 1.5) / ea_runtime(300, 1.5), 1.0,
              1e-8);
}

TEST(RuntimeIntegral, TabulatedRateMatchesIndependentQuadrature) {
  const RatePredicate m = RatePredicate::tabulated({{0.0, 0.0}, {0.5, 1.0}, {1.0, 0.25}});
  const double chi = 1.3;
  auto rate = [](double x) { return x <= 0.5 ? 2.0 * x : 1.0 - 1.5 * (x - 0.5); };
  // Split at the kink so the trapezoid rule keeps its error order.
  const double left = richardson_trapezoid(
      [&](double u) { const double x = 0.5 * u; return 0.5 * std::exp(chi * x) / (2 + rate(x)); },
      20000);
  const double right = richardson_trapezoid(
      [&](double u) {
        const double x = 0.5 + 0.5 * u;
        return 0.5 * std::exp(chi * x) / (2 + rate(x));
      },
      20000);
  const double want = (left + right) / chi;
  EXPECT_LT(std::abs(runtime_integral(m, 1.0, chi) / want - 1.0), 1e-8);
}

TEST(RatePredicate, TabulatedInterpolationAndValidation) {
  const RatePredicate m = RatePredicate::tabulated({{0.0, 1.0}, {1.0, 3.0}});
  EXPECT_DOUBLE_EQ(m(0.25), 1.5);
  EXPECT_DOUBLE_EQ(m(1.0), 3.0);
  EXPECT_FALSE(m.is_constant());
  EXPECT_TRUE(RatePredicate::constant(2).is_constant());
  EXPECT_THROW(RatePredicate::tabulated({{0.1, 1.0}, {1.0, 1.0}}), std::invalid_argument);
  EXPECT_THROW(RatePredicate::tabulated({{0.0, 1.0}, {0.9, 1.0}}), std::invalid_argument);
  EXPECT_THROW(RatePredicate::tabulated({{0.0, 1.0}, {0.5, -1.0}, {1.0, 1.0}}),
               std::invalid_argument);
  EXPECT_THROW(RatePredicate::tabulated({{0.0, 1.0}, {0.5, 1.0}, {0.5, 1.0}, {1.0, 1.0}}),
               std::invalid_argument);
  EXPECT_THROW(RatePredicate::constant(-1), std::invalid_argument);
}

TEST(TiebreakBound, Examples) {
  EXPECT_DOUBLE_EQ(tiebreak_speedup_bound(0.0), 1.0);
  EXPECT_DOUBLE_EQ(tiebreak_speedup_bound(1.0), 1.0);
  EXPECT_NEAR(tiebreak_speedup_bound(0.6), 2.0 / (2.0 + 0.24 / 7.2), 1e-15);
  EXPECT_NEAR(tiebreak_speedup_bound(0.6), 0.983607, 1e-6);
  EXPECT_NEAR(tiebreak_extra_free_rider_rate(0.6), 0.24 / 7.2, 1e-15);
}

TEST(TiebreakBound, BelowOneWithMinimumNearPointSix) {
  double best = 2.0;
  double arg = 0.0;
  for (int k = 1; k < 1000; ++k) {
    const double p = k / 1000.0;
    const double v = tiebreak_speedup_bound(p);
    EXPECT_LT(v, 1.0);
    if (v < best) {
      best = v;
      arg = p;
    }
  }
  EXPECT_NEAR(arg, 0.6, 0.05);
}

TEST(PlateauBound, Examples) {
  EXPECT_DOUBLE_EQ(plateau_diversity_bound(1.0), 0.0);
  EXPECT_NEAR(plateau_diversity_bound(0.0), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(plateau_diversity_bound(0.6), 0.22222, 1e-5);
  EXPECT_EQ(ef_probability_bound(0.0, 0.7), 0.0);
  EXPECT_NEAR(ef_probability_bound(0.6, 0.2222), 0.016665, 1e-6);
  EXPECT_DOUBLE_EQ(ef_probability_bound(1.0, 1.0), 0.125);
}

TEST(FlatRecursion, Examples) {
  EXPECT_DOUBLE_EQ(flat_diversity_step(0.0, 2, 1.0, 1000), 2.0);
  EXPECT_NEAR(flat_diversity_fixed_point(2, 1.0, 1000), 3.9920, 1e-4);
  EXPECT_NEAR(flat_diversity_fixed_point(8, 1.0, 1000), 7.0 * 64 * 1000 / 1014.0, 1e-9);
  EXPECT_NEAR(flat_diversity_fixed_point(8, 1.0, 1000), 441.81, 0.01);
  EXPECT_NEAR(flat_diversity_alpha(2, 1.0, 1000), 8000.0 / 1004.0, 1e-12);
  EXPECT_NEAR(flat_diversity_alpha(8, 1.0, 1000), 896000.0 / 1028.0, 1e-9);
  EXPECT_NEAR(flat_diversity_alpha(2, 1.0, 1e12), 8.0, 1e-9);
  EXPECT_NEAR(flat_diversity_contraction(2, 1.0, 1000), 0.5 - 4.0 / 4000.0, 1e-15);
}

TEST(FlatRecursion, IterationConvergesMonotonically) {
  for (std::size_t mu : {2u, 3u, 5u, 8u}) {
    for (double chi : {0.5, 1.0, 2.0}) {
      for (double length : {100.0, 1000.0}) {
        ASSERT_GT(length, 2.0 * (mu - 1) * chi);
        const double c = flat_diversity_contraction(mu, chi, length);
        EXPECT_GT(c, 0.0);
        EXPECT_LT(c, 1.0);
        const double target = flat_diversity_fixed_point(mu, chi, length);
        EXPECT_NEAR(flat_diversity_step(target, mu, chi, length), target, 1e-9 * target);
        double s = 0.0;
        std::size_t steps = 0;
        while (std::abs(s - target) > 1e-6 && steps <= 20 * mu * mu) {
          const double next = flat_diversity_step(s, mu, chi, length);
          ASSERT_GT(next, s);
          ASSERT_LE(next, target + 1e-9);
          s = next;
          ++steps;
        }
        EXPECT_LE(steps, 20 * mu * mu) << "mu=" << mu << " chi=" << chi << " N=" << length;
      }
    }
  }
}

TEST(TruncatedJump, Examples) {
  EXPECT_DOUBLE_EQ(truncated_jump_mean(1), 1.0);
  EXPECT_DOUBLE_EQ(truncated_jump_mean(3), 0.5 + 2 * 0.25 + 3 * 0.25);
  EXPECT_NEAR(truncated_jump_mean(60), 2.0, 1e-15);
  // Direct enumeration of the truncated law.
  for (std::size_t r = 1; r <= 20; ++r) {
    double mean = 0.0;
    for (std::size_t j = 1; j < r; ++j) mean += j * std::ldexp(1.0, -int(j));
    mean += r * std::ldexp(1.0, -int(r - 1));
    EXPECT_NEAR(truncated_jump_mean(r), mean, 1e-14) << r;
  }
}

}  // namespace
}  // namespace mpga::theory
