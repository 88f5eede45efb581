#include <gtest/gtest.h>

#include <vector>

#include "mpga/diversity.hpp"

namespace mpga {
namespace {

std::vector<Genome> parse(std::initializer_list<const char*> bits) {
  std::vector<Genome> out;
  for (const char* b : bits) out.push_back(Genome::from_string(b));
  return out;
}

// Ordered-pair double loop.
std::uint64_t naive_s(const std::vector<Genome>& p) {
  std::uint64_t s = 0;
  for (const auto& x : p) {
    for (const auto& y : p) {
      for (std::size_t i = 1; i <= x.size(); ++i) s += x.get(i) != y.get(i);
    }
  }
  return s;
}

TEST(SOfPopulation, Examples) {
  EXPECT_EQ(s_of_population(parse({"000", "000"})), 0u);
  EXPECT_EQ(s_of_population(parse({"000", "111", "110"})), 12u);
  EXPECT_EQ(s_of_population(parse({"0", "1"})), 2u);
}

TEST(SOfPoint, Examples) {
  EXPECT_EQ(s_of_point(Genome::from_string("000"), parse({"000"})), 0u);
  EXPECT_EQ(s_of_point(Genome::from_string("000"), parse({"111", "110"})), 5u);
  EXPECT_EQ(s_of_point(Genome::from_string("1"), {}), 0u);
}

TEST(SOfPopulation, EqualsSumOfPointSumsAndNaive) {
  Rng rng(31);
  for (std::size_t mu : {2u, 3u, 5u, 9u}) {
    for (std::size_t n : {1u, 17u, 64u, 150u}) {
      std::vector<Genome> p;
      for (std::size_t i = 0; i < mu; ++i) p.push_back(Genome::random(n, rng));
      std::uint64_t by_point = 0;
      for (const auto& x : p) by_point += s_of_point(x, p);
      EXPECT_EQ(s_of_population(p), by_point);
      EXPECT_EQ(s_of_population(p), naive_s(p));
    }
  }
}

TEST(NormalizedDiversity, Examples) {
  EXPECT_NEAR(normalized_diversity(parse({"11010", "11001"}), 1), 4.0 / 6.0, 1e-12);
  EXPECT_EQ(normalized_diversity(parse({"10110", "10110", "10110"}), 1), 0.0);
  EXPECT_EQ(normalized_diversity(parse({"11110", "11111"}), 4), 0.0);
  EXPECT_THROW(normalized_diversity(parse({"11010"}), 1), std::invalid_argument);
}

TEST(NormalizedDiversity, StaysInUnitInterval) {
  Rng rng(32);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t mu = 2 + rng() % 6;
    const std::size_t n = 2 + rng() % 150;
    std::vector<Genome> p;
    for (std::size_t i = 0; i < mu; ++i) p.push_back(Genome::random(n, rng));
    const double d = normalized_diversity(p, rng() % n);
    EXPECT_GE(d, 0.0);
    EXPECT_LE(d, 1.0);
  }
  // Complementary suffixes reach the upper end for mu = 2.
  EXPECT_EQ(normalized_diversity(parse({"1000", "1111"}), 1), 1.0);
}

TEST(DiversityState, MatrixInvariants) {
  Rng rng(33);
  std::vector<Genome> p;
  for (int i = 0; i < 6; ++i) p.push_back(Genome::random(100, rng));
  const DiversityState st(p);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(st.at(i, i), 0u);
    std::uint64_t row = 0;
    for (std::size_t j = 0; j < 6; ++j) {
      EXPECT_EQ(st.at(i, j), st.at(j, i));
      EXPECT_EQ(st.at(i, j), hamming(p[i], p[j]));
      row += st.at(i, j);
    }
    EXPECT_EQ(st.row_sum(i), row);
    total += row;
  }
  EXPECT_EQ(st.total(), total);
  EXPECT_EQ(st.total(), s_of_population(p));
}

TEST(DiversityState, IncrementalMatchesRecompute) {
  Rng rng(34);
  for (std::size_t mu : {2u, 3u, 4u, 8u}) {
    const std::size_t n = 1 + rng() % 200;
    std::vector<Genome> p;
    for (std::size_t i = 0; i < mu; ++i) p.push_back(Genome::random(n, rng));
    DiversityState st(p);
    std::vector<std::uint32_t> row(mu);
    for (int step = 0; step < 300; ++step) {
      const std::size_t idx = rng() % mu;
      Genome y = (rng() & 1) ? Genome::random(n, rng) : p[rng() % mu];
      y.flip(1 + rng() % n);
      DiversityState::distances(y, p, idx, row);
      st.replace(idx, row);
      p[idx] = y;
      ASSERT_EQ(st, DiversityState(p)) << "mu=" << mu << " step=" << step;
    }
  }
}

}  // namespace
}  // namespace mpga
