#include "mpga/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "mpga/simd.hpp"

namespace mpga {

namespace {

std::geometric_distribution<std::uint64_t> make_gap(double rate) {
  // Only used for 0 < rate < 1; the extremes are handled without sampling.
  return std::geometric_distribution<std::uint64_t>(rate > 0.0 && rate < 1.0 ? rate : 0.5);
}

}  // namespace

MutationParams::MutationParams(double chi, std::size_t n)
    : chi_(chi), n_(n), rate_(n > 0 ? chi / static_cast<double>(n) : 0.0), gap_(make_gap(rate_)) {
  if (n == 0) throw std::invalid_argument("mutation: genome length must be positive");
  if (!(chi >= 0.0) || rate_ > 1.0) {
    throw std::invalid_argument("mutation: need 0 <= chi <= n");
  }
}

double MutationParams::clone_probability() const {
  return std::pow(1.0 - rate_, static_cast<double>(n_));
}

void mutate_in_place(Genome& y, const MutationParams& params, Rng& rng) {
  if (y.size() != params.n_) {
    throw std::invalid_argument("mutate: genome length does not match parameters");
  }
  if (params.rate_ <= 0.0) return;
  if (params.rate_ >= 1.0) {
    y.complement();
    return;
  }
  auto gap = params.gap_;
  auto words = y.words();
  const std::uint64_t n = params.n_;
  for (std::uint64_t i = gap(rng); i < n; i += 1 + gap(rng)) {
    words[i >> 6] ^= std::uint64_t{1} << (i & 63);
  }
}

Genome mutate(const Genome& x, const MutationParams& params, Rng& rng) {
  Genome y = x;
  mutate_in_place(y, params, rng);
  return y;
}

void uniform_crossover_into(const Genome& x1, const Genome& x2, Rng& rng, Genome& out,
                            std::vector<std::uint64_t>& mask) {
  if (x1.size() != x2.size()) {
    throw std::invalid_argument("uniform_crossover: parent lengths differ");
  }
  const std::size_t words = x1.word_count();
  mask.resize(words);
  for (auto& m : mask) m = rng();
  if (out.size() != x1.size()) out = Genome(x1.size());
  simd::active().blend(x1.words().data(), x2.words().data(), mask.data(), out.words().data(),
                       words);
  // Padding is zero in both parents, so it stays zero.
}

Genome uniform_crossover(const Genome& x1, const Genome& x2, Rng& rng) {
  Genome out(x1.size());
  std::vector<std::uint64_t> mask;
  uniform_crossover_into(x1, x2, rng, out, mask);
  return out;
}

ParentChoice select_parents(std::size_t mu, double p_c, Rng& rng) {
  if (!(p_c >= 0.0 && p_c <= 1.0)) {
    throw std::invalid_argument("select_parents: p_c must lie in [0, 1]");
  }
  if (mu == 0) throw std::invalid_argument("select_parents: empty population");
  if (p_c > 0.0 && mu < 2) {
    throw std::invalid_argument("select_parents: crossover needs at least two members");
  }
  ParentChoice choice;
  if (std::bernoulli_distribution(p_c)(rng)) {
    std::size_t a = std::uniform_int_distribution<std::size_t>(0, mu - 1)(rng);
    std::size_t b = std::uniform_int_distribution<std::size_t>(0, mu - 2)(rng);
    if (b >= a) ++b;
    choice.first = std::min(a, b);
    choice.second = std::max(a, b);
  } else {
    choice.first = std::uniform_int_distribution<std::size_t>(0, mu - 1)(rng);
  }
  return choice;
}

TieWinner break_tie_by_scores(TieBreakKind kind, std::uint64_t s_offspring,
                              std::uint64_t s_incumbent, Rng& rng) {
  switch (kind) {
    case TieBreakKind::OffspringFavoring:
      return TieWinner::Offspring;
    case TieBreakKind::Uniform:
      return (rng() & 1u) ? TieWinner::Offspring : TieWinner::Incumbent;
    case TieBreakKind::DiversityImproving:
      return s_offspring >= s_incumbent ? TieWinner::Offspring : TieWinner::Incumbent;
  }
  return TieWinner::Offspring;
}

TieWinner break_tie(TieBreakKind kind, std::span<const Genome> population,
                    std::size_t incumbent, const Genome& offspring, Rng& rng) {
  if (incumbent >= population.size()) {
    throw std::out_of_range("break_tie: incumbent index out of range");
  }
  std::uint64_t s_off = 0;
  std::uint64_t s_inc = 0;
  if (kind == TieBreakKind::DiversityImproving) {
    for (std::size_t j = 0; j < population.size(); ++j) {
      if (j == incumbent) continue;
      s_off += hamming(offspring, population[j]);
      s_inc += hamming(population[incumbent], population[j]);
    }
  }
  return break_tie_by_scores(kind, s_off, s_inc, rng);
}

Automorphism::Automorphism(std::vector<std::size_t> perm, Genome mask)
    : perm_(std::move(perm)), mask_(std::move(mask)) {
  if (mask_.size() != perm_.size()) {
    throw std::invalid_argument("automorphism: mask length differs from permutation size");
  }
  std::vector<bool> seen(perm_.size() + 1, false);
  for (std::size_t p : perm_) {
    if (p == 0 || p > perm_.size() || seen[p]) {
      throw std::invalid_argument("automorphism: not a permutation of 1..n");
    }
    seen[p] = true;
  }
}

Automorphism Automorphism::random(std::size_t n, Rng& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{1});
  std::shuffle(perm.begin(), perm.end(), rng);
  return Automorphism(std::move(perm), Genome::random(n, rng));
}

Genome Automorphism::apply(const Genome& x) const {
  if (x.size() != perm_.size()) throw std::invalid_argument("automorphism: length mismatch");
  Genome y(x.size());
  for (std::size_t i = 1; i <= x.size(); ++i) {
    const std::size_t target = perm_[i - 1];
    y.set(target, x.get(i) != mask_.get(target));
  }
  return y;
}

Genome Automorphism::apply_inverse(const Genome& y) const {
  if (y.size() != perm_.size()) throw std::invalid_argument("automorphism: length mismatch");
  Genome x(y.size());
  for (std::size_t i = 1; i <= y.size(); ++i) {
    const std::size_t source = perm_[i - 1];
    x.set(i, y.get(source) != mask_.get(source));
  }
  return x;
}

}  // namespace mpga
