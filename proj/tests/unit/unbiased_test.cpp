#include <gtest/gtest.h>

#include "mpga/unbiased.hpp"

namespace mpga {
namespace {

OperatorUnderTest set_first_bit() {
  OperatorUnderTest op;
  op.name = "set bit 1";
  op.arity = 1;
  op.sample = [](std::span<const Genome> in, Rng&) {
    Genome y = in[0];
    y.set(1, true);
    return y;
  };
  return op;
}

TEST(Unbiased, MutationExactHasZeroDeviation) {
  Rng rng(61);
  for (std::size_t n : {4u, 8u}) {
    UnbiasedCheckOptions opt;
    opt.n = n;
    opt.mode = CheckMode::Exact;
    opt.automorphisms = 8;
    const UnbiasedReport r = check_unbiased(standard_bit_mutation_operator(1.0, n), opt, rng);
    EXPECT_EQ(r.mode_used, CheckMode::Exact);
    EXPECT_FALSE(r.fell_back_to_sampling);
    EXPECT_EQ(r.max_deviation, 0.0);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.automorphisms_checked, 8u);
  }
}

TEST(Unbiased, CrossoverSampling) {
  Rng rng(62);
  UnbiasedCheckOptions opt;
  opt.n = 4;
  const UnbiasedReport r = check_unbiased(uniform_crossover_operator(), opt, rng);
  EXPECT_EQ(r.mode_used, CheckMode::Sampling);
  EXPECT_LT(r.max_deviation, 0.01);
  EXPECT_TRUE(r.pass);
}

TEST(Unbiased, ExactRequestWithoutClosedFormFallsBack) {
  Rng rng(63);
  UnbiasedCheckOptions opt;
  opt.n = 4;
  opt.samples = 100'000;
  opt.epsilon = 0.03;
  opt.mode = CheckMode::Exact;
  const UnbiasedReport r = check_unbiased(uniform_crossover_operator(), opt, rng);
  EXPECT_TRUE(r.fell_back_to_sampling);
  EXPECT_EQ(r.mode_used, CheckMode::Sampling);
}

TEST(Unbiased, BiasedOperatorIsRejected) {
  Rng rng(64);
  UnbiasedCheckOptions opt;
  opt.n = 4;
  opt.samples = 10'000;
  opt.automorphisms = 16;
  const UnbiasedReport r = check_unbiased(set_first_bit(), opt, rng);
  EXPECT_FALSE(r.pass);
  EXPECT_GT(r.max_deviation, 0.5);
}

TEST(Unbiased, TieBreakersAreUnbiased) {
  Rng rng(65);
  for (TieBreakKind kind : {TieBreakKind::DiversityImproving, TieBreakKind::Uniform}) {
    UnbiasedCheckOptions opt;
    opt.n = 8;
    opt.samples = 200'000;
    const UnbiasedReport r = check_unbiased(tie_breaker_operator(kind, 2), opt, rng);
    EXPECT_TRUE(r.pass) << r.max_deviation;
  }
}

TEST(Unbiased, RejectsOversizedSampling) {
  Rng rng(66);
  UnbiasedCheckOptions opt;
  opt.n = 30;
  EXPECT_THROW(check_unbiased(uniform_crossover_operator(), opt, rng), std::invalid_argument);
}

}  // namespace
}  // namespace mpga
