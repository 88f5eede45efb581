#pragma once
// The (mu+1) GA main loop.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mpga/diversity.hpp"
#include "mpga/genome.hpp"
#include "mpga/operators.hpp"
#include "mpga/rng.hpp"

namespace mpga {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class InitMode { AllZeros, UniformRandom };

struct GaConfig {
  std::size_t n = 100;
  std::size_t mu = 1;
  double chi = 1.0;
  double p_c = 0.0;
  TieBreakKind tie_break = TieBreakKind::OffspringFavoring;
  InitMode init = InitMode::AllZeros;
  bool adaptive_pc = false;
  FitnessKind fitness = FitnessKind::LeadingOnes;
  std::optional<std::uint64_t> max_iterations;  // default 100 n^2
  std::uint64_t seed = 0;

  /// Throws ConfigError.
  void validate() const;
  std::uint64_t iteration_cap() const;
};

class Population {
 public:
  Population(std::vector<Genome> members, FitnessKind fitness);

  std::size_t size() const { return members_.size(); }
  const Genome& member(std::size_t i) const { return members_[i]; }
  std::size_t fitness(std::size_t i) const { return fitnesses_[i]; }
  std::span<const Genome> members() const { return members_; }
  std::span<const std::size_t> fitnesses() const { return fitnesses_; }

  std::size_t best_fitness() const;
  std::size_t worst_fitness() const;
  /// All members share one fitness value.
  bool consolidated() const;

  void replace(std::size_t i, const Genome& g, std::size_t fitness);

 private:
  std::vector<Genome> members_;
  std::vector<std::size_t> fitnesses_;
};

/// AllZeros: mu copies of 0^n. UniformRandom: mu independent uniform strings.
Population init_population(const GaConfig& config, Rng& rng);

/// 0 if the population is consolidated, 1 otherwise.
double adaptive_pc(const Population& population);

struct IterationEvent {
  std::uint64_t t = 0;
  bool used_crossover = false;
  std::size_t parent_first = 0;
  std::optional<std::size_t> parent_second;
  std::optional<std::size_t> intermediate_fitness;  // crossover product before mutation
  std::size_t offspring_fitness = 0;
  bool accepted = false;
  std::optional<std::size_t> replaced_index;
  std::size_t new_max_fitness = 0;  // F_t
  bool consolidated = false;        // P_t consolidated
  std::uint64_t s_total = 0;        // S(P_t)
  /// d(P_{t-1}); present only when this step raised the best fitness.
  std::optional<double> leave_diversity;
};

class Engine {
 public:
  /// Validates the config, seeds the generator and evaluates the initial
  /// population (mu evaluations).
  explicit Engine(GaConfig config);

  const GaConfig& config() const { return config_; }
  const Population& population() const { return population_; }
  const DiversityState& diversity() const { return diversity_; }
  std::uint64_t iteration() const { return t_; }
  std::uint64_t evaluations() const { return evaluations_; }
  bool optimum_found() const { return optimum_found_; }
  /// d(P) at the current best fitness; empty for mu < 2.
  std::optional<double> current_diversity() const;

  IterationEvent step();

 private:
  GaConfig config_;
  Rng rng_;
  MutationParams mutation_;
  Population population_;
  DiversityState diversity_;
  std::uint64_t t_ = 0;
  std::uint64_t evaluations_ = 0;
  bool optimum_found_ = false;

  Genome child_;
  std::vector<std::uint64_t> mask_;
  std::vector<std::uint32_t> row_;
  std::vector<std::size_t> minimal_;
};

}  // namespace mpga
