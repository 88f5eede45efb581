#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

#include "mpga/genome.hpp"
#include "mpga/rng.hpp"

namespace mpga {
namespace {

// Character-level references.
std::size_t naive_lo(const std::string& s) {
  std::size_t k = 0;
  while (k < s.size() && s[k] == '1') ++k;
  return k;
}

std::size_t naive_hamming(const std::string& a, const std::string& b, std::size_t from = 1) {
  std::size_t d = 0;
  for (std::size_t i = from - 1; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

std::string random_bits(std::size_t n, Rng& rng) {
  std::string s(n, '0');
  for (auto& c : s) c = (rng() & 1) ? '1' : '0';
  return s;
}

TEST(Genome, RoundTripsStrings) {
  for (const std::string& s : std::vector<std::string>{"", "0", "1", "11010", std::string(64, '1'), std::string(65, '1') + "0"}) {
    EXPECT_EQ(Genome::from_string(s).to_string(), s);
  }
  EXPECT_THROW(Genome::from_string("0120"), std::invalid_argument);
}

TEST(Genome, BitAccessIsOneBased) {
  Genome g(70);
  g.set(1, true);
  g.set(70, true);
  EXPECT_TRUE(g.get(1));
  EXPECT_TRUE(g.get(70));
  EXPECT_FALSE(g.get(2));
  g.flip(70);
  EXPECT_FALSE(g.get(70));
  EXPECT_THROW(g.get(0), std::out_of_range);
  EXPECT_THROW(g.get(71), std::out_of_range);
  EXPECT_THROW(g.set(71, true), std::out_of_range);
}

TEST(Genome, ComplementKeepsPaddingZero) {
  Genome g(70);
  g.complement();
  EXPECT_EQ(g.to_string(), std::string(70, '1'));
  EXPECT_EQ(g.words()[1], (std::uint64_t{1} << 6) - 1);
  EXPECT_EQ(g, Genome::ones(70));
}

TEST(LeadingOnes, Examples) {
  EXPECT_EQ(leading_ones(Genome::from_string("11010")), 2u);
  EXPECT_EQ(leading_ones(Genome::from_string("00000")), 0u);
  EXPECT_EQ(leading_ones(Genome::ones(5)), 5u);
  EXPECT_EQ(leading_ones(Genome::ones(64)), 64u);
  EXPECT_EQ(leading_ones(Genome::ones(200)), 200u);
  EXPECT_EQ(leading_ones(Genome(0)), 0u);
}

TEST(LeadingOnes, MatchesCharacterScan) {
  Rng rng(11);
  for (std::size_t n : {1u, 7u, 63u, 64u, 65u, 128u, 130u, 300u}) {
    for (int rep = 0; rep < 200; ++rep) {
      std::string s = random_bits(n, rng);
      // Force long prefixes so word boundaries are crossed.
      const std::size_t prefix = rng() % (n + 1);
      for (std::size_t i = 0; i < prefix; ++i) s[i] = '1';
      EXPECT_EQ(leading_ones(Genome::from_string(s)), naive_lo(s)) << s;
    }
  }
}

TEST(LeadingOnes, PrefixLawOnUniformStrings) {
  // Pr(LO >= j) = 2^-j.
  Rng rng(12);
  const int samples = 400000;
  int counts[5] = {};
  for (int k = 0; k < samples; ++k) {
    const std::size_t lo = leading_ones(Genome::random(40, rng));
    for (std::size_t j = 1; j <= 4; ++j) counts[j] += lo >= j;
  }
  for (std::size_t j = 1; j <= 4; ++j) {
    EXPECT_NEAR(counts[j] / double(samples), std::ldexp(1.0, -int(j)), 0.005) << j;
  }
}

TEST(Hamming, Examples) {
  EXPECT_EQ(hamming(Genome::from_string("11010"), Genome::from_string("11001")), 2u);
  EXPECT_EQ(hamming(Genome::from_string("000"), Genome::from_string("111")), 3u);
  EXPECT_THROW(hamming(Genome(3), Genome(4)), std::invalid_argument);
}

TEST(Hamming, MetricAndXorInvariance) {
  Rng rng(13);
  for (std::size_t n : {5u, 64u, 129u, 513u}) {
    for (int rep = 0; rep < 50; ++rep) {
      const Genome x = Genome::random(n, rng);
      const Genome y = Genome::random(n, rng);
      const Genome z = Genome::random(n, rng);
      EXPECT_EQ(hamming(x, x), 0u);
      EXPECT_EQ(hamming(x, y), hamming(y, x));
      EXPECT_LE(hamming(x, z), hamming(x, y) + hamming(y, z));
      EXPECT_EQ(hamming(x, y), naive_hamming(x.to_string(), y.to_string()));
      // H(x xor z, y xor z) = H(x, y)
      Genome xz = x;
      Genome yz = y;
      for (std::size_t w = 0; w < x.word_count(); ++w) {
        xz.words()[w] ^= z.words()[w];
        yz.words()[w] ^= z.words()[w];
      }
      EXPECT_EQ(hamming(xz, yz), hamming(x, y));
    }
  }
}

TEST(Hamming, FromPosition) {
  Rng rng(14);
  for (std::size_t n : {1u, 63u, 64u, 65u, 200u}) {
    const Genome x = Genome::random(n, rng);
    const Genome y = Genome::random(n, rng);
    for (std::size_t from = 1; from <= n + 1; ++from) {
      EXPECT_EQ(hamming_from(x, y, from), naive_hamming(x.to_string(), y.to_string(), from));
      if (from <= n) {
        EXPECT_EQ(hamming_from(x, y, from), hamming(suffix(x, from), suffix(y, from)));
      }
    }
  }
}

TEST(Suffix, Examples) {
  const Genome x = Genome::from_string("11010");
  EXPECT_EQ(suffix(x, 3).to_string(), "010");
  EXPECT_EQ(suffix(x, 1), x);
  EXPECT_TRUE(suffix(x, 6).empty());
  EXPECT_THROW(suffix(x, 7), std::out_of_range);
  EXPECT_THROW(suffix(x, 0), std::out_of_range);
}

TEST(Suffix, AcrossWordBoundaries) {
  Rng rng(15);
  const Genome x = Genome::random(300, rng);
  const std::string s = x.to_string();
  for (std::size_t from = 1; from <= 301; from += 7) {
    EXPECT_EQ(suffix(x, from).to_string(), s.substr(from - 1));
  }
}

TEST(Evaluate, FlatIsConstant) {
  EXPECT_EQ(evaluate(FitnessKind::Flat, Genome::ones(10)), 0u);
  EXPECT_EQ(evaluate(FitnessKind::LeadingOnes, Genome::ones(10)), 10u);
}

TEST(Seeds, DerivationIsDeterministicAndSpread) {
  EXPECT_EQ(derive_run_seed(42, 7), derive_run_seed(42, 7));
  EXPECT_NE(derive_run_seed(42, 7), derive_run_seed(42, 8));
  EXPECT_NE(derive_run_seed(42, 0), derive_run_seed(43, 0));
  // First output of SplitMix64 seeded with 0.
  EXPECT_EQ(mix64(0x9E3779B97F4A7C15ULL), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(mix64(0), 0u);
  EXPECT_EQ(derive_run_seed(5, 0), mix64(5));
}

}  // namespace
}  // namespace mpga
