#pragma once
// Variation operators, parent selection and tie-breaking for the (mu+1) GA.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "mpga/genome.hpp"
#include "mpga/rng.hpp"

namespace mpga {

/// Standard bit mutation with per-bit rate chi/n.
class MutationParams {
 public:
  /// Throws std::invalid_argument unless n > 0 and 0 <= chi <= n.
  MutationParams(double chi, std::size_t n);

  double chi() const { return chi_; }
  std::size_t n() const { return n_; }
  double rate() const { return rate_; }
  /// (1 - chi/n)^n, the probability that mutation returns its input.
  double clone_probability() const;

 private:
  friend void mutate_in_place(Genome&, const MutationParams&, Rng&);
  double chi_;
  std::size_t n_;
  double rate_;
  std::geometric_distribution<std::uint64_t> gap_;
};

/// Flips each bit independently with probability chi/n. Skips between flip
/// positions with geometric gaps, so the expected work is O(chi + 1).
void mutate_in_place(Genome& y, const MutationParams& params, Rng& rng);
Genome mutate(const Genome& x, const MutationParams& params, Rng& rng);

/// Writes a uniform crossover of x1 and x2 into `out`, drawing one random
/// word per 64 positions into `mask`. Throws on length mismatch.
void uniform_crossover_into(const Genome& x1, const Genome& x2, Rng& rng, Genome& out,
                            std::vector<std::uint64_t>& mask);
Genome uniform_crossover(const Genome& x1, const Genome& x2, Rng& rng);

struct ParentChoice {
  std::size_t first = 0;
  std::optional<std::size_t> second;  // set iff crossover; first < second
  bool crossover() const { return second.has_value(); }
};

/// With probability p_c a uniform unordered pair of distinct indices,
/// otherwise one uniform index. Throws if p_c is outside [0, 1] or if
/// p_c > 0 with mu < 2.
ParentChoice select_parents(std::size_t mu, double p_c, Rng& rng);

enum class TieBreakKind { OffspringFavoring, Uniform, DiversityImproving };
enum class TieWinner { Offspring, Incumbent };

/// Breaks a fitness tie between `offspring` and population[incumbent]. The
/// diversity rule compares S over the population without the incumbent (the
/// offspring is not a member yet) and keeps the offspring on equality.
TieWinner break_tie(TieBreakKind kind, std::span<const Genome> population,
                    std::size_t incumbent, const Genome& offspring, Rng& rng);

/// Same decision from precomputed S-values.
TieWinner break_tie_by_scores(TieBreakKind kind, std::uint64_t s_offspring,
                              std::uint64_t s_incumbent, Rng& rng);

/// Hypercube automorphism x -> sigma(x) xor mask, where sigma moves the bit at
/// position i to position perm[i-1] (1-based).
class Automorphism {
 public:
  /// Throws std::invalid_argument if perm is not a permutation of 1..n or the
  /// mask length differs.
  Automorphism(std::vector<std::size_t> perm, Genome mask);
  static Automorphism random(std::size_t n, Rng& rng);

  std::size_t size() const { return perm_.size(); }
  Genome apply(const Genome& x) const;
  Genome apply_inverse(const Genome& y) const;

 private:
  std::vector<std::size_t> perm_;
  Genome mask_;
};

}  // namespace mpga
