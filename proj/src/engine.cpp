#include "mpga/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace mpga {

void GaConfig::validate() const {
  if (n == 0) throw ConfigError("n must be positive");
  if (mu == 0) throw ConfigError("mu must be at least 1");
  if (!(chi >= 0.0) || chi > static_cast<double>(n)) {
    throw ConfigError("chi must satisfy 0 <= chi <= n");
  }
  if (!adaptive_pc) {
    if (!(p_c >= 0.0 && p_c < 1.0)) throw ConfigError("p_c must lie in [0, 1)");
    if (p_c > 0.0 && mu < 2) throw ConfigError("crossover (p_c > 0) needs mu >= 2");
  } else if (mu < 2) {
    throw ConfigError("adaptive p_c needs mu >= 2");
  }
  if (max_iterations && *max_iterations == 0) {
    throw ConfigError("max_iterations must be positive when given");
  }
  if (fitness == FitnessKind::Flat && !max_iterations) {
    throw ConfigError("flat fitness has no optimum; max_iterations is required");
  }
}

std::uint64_t GaConfig::iteration_cap() const {
  return max_iterations.value_or(100 * static_cast<std::uint64_t>(n) * n);
}

Population::Population(std::vector<Genome> members, FitnessKind fitness)
    : members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("population must not be empty");
  fitnesses_.reserve(members_.size());
  for (const auto& m : members_) {
    if (m.size() != members_.front().size()) {
      throw std::invalid_argument("population members must share one length");
    }
    fitnesses_.push_back(evaluate(fitness, m));
  }
}

std::size_t Population::best_fitness() const {
  return *std::max_element(fitnesses_.begin(), fitnesses_.end());
}

std::size_t Population::worst_fitness() const {
  return *std::min_element(fitnesses_.begin(), fitnesses_.end());
}

bool Population::consolidated() const {
  return std::all_of(fitnesses_.begin(), fitnesses_.end(),
                     [&](std::size_t f) { return f == fitnesses_.front(); });
}

void Population::replace(std::size_t i, const Genome& g, std::size_t fitness) {
  members_[i] = g;
  fitnesses_[i] = fitness;
}

Population init_population(const GaConfig& config, Rng& rng) {
  std::vector<Genome> members;
  members.reserve(config.mu);
  for (std::size_t i = 0; i < config.mu; ++i) {
    members.push_back(config.init == InitMode::AllZeros ? Genome(config.n)
                                                        : Genome::random(config.n, rng));
  }
  return Population(std::move(members), config.fitness);
}

double adaptive_pc(const Population& population) {
  return population.consolidated() ? 0.0 : 1.0;
}

namespace {

const GaConfig& validated(const GaConfig& config) {
  config.validate();
  return config;
}

}  // namespace

Engine::Engine(GaConfig config)
    : config_(validated(config)),
      rng_(config_.seed),
      mutation_(config_.chi, config_.n),
      population_(init_population(config_, rng_)),
      diversity_(population_.members()),
      evaluations_(config_.mu),
      child_(config_.n),
      row_(config_.mu, 0) {
  minimal_.reserve(config_.mu);
  optimum_found_ =
      config_.fitness == FitnessKind::LeadingOnes && population_.best_fitness() == config_.n;
}

std::optional<double> Engine::current_diversity() const {
  if (population_.size() < 2) return std::nullopt;
  return normalized_diversity(population_.members(), population_.best_fitness());
}

IterationEvent Engine::step() {
  IterationEvent ev;
  ev.t = ++t_;
  const std::size_t mu = population_.size();
  const auto members = population_.members();

  const double pc = config_.adaptive_pc ? adaptive_pc(population_) : config_.p_c;
  const ParentChoice parents = select_parents(mu, pc, rng_);
  ev.parent_first = parents.first;
  ev.parent_second = parents.second;
  ev.used_crossover = parents.crossover();
  if (parents.crossover()) {
    uniform_crossover_into(members[parents.first], members[*parents.second], rng_, child_, mask_);
    ev.intermediate_fitness = evaluate(config_.fitness, child_);
  } else {
    child_ = members[parents.first];
  }
  mutate_in_place(child_, mutation_, rng_);
  const std::size_t f = evaluate(config_.fitness, child_);
  ++evaluations_;
  ev.offspring_fitness = f;

  const std::size_t old_best = population_.best_fitness();
  const std::size_t worst = population_.worst_fitness();
  minimal_.clear();
  for (std::size_t i = 0; i < mu; ++i) {
    if (population_.fitness(i) == worst) minimal_.push_back(i);
  }
  const std::size_t z =
      minimal_.size() == 1
          ? minimal_.front()
          : minimal_[std::uniform_int_distribution<std::size_t>(0, minimal_.size() - 1)(rng_)];

  bool row_ready = false;
  bool accept = f > worst;
  if (f == worst) {
    std::uint64_t s_off = 0;
    if (config_.tie_break == TieBreakKind::DiversityImproving) {
      DiversityState::distances(child_, members, z, row_);
      row_ready = true;
      s_off = std::accumulate(row_.begin(), row_.end(), std::uint64_t{0});
    }
    accept = break_tie_by_scores(config_.tie_break, s_off, diversity_.row_sum(z), rng_) ==
             TieWinner::Offspring;
  }

  if (accept) {
    if (f > old_best) ev.leave_diversity = current_diversity();
    if (!row_ready) DiversityState::distances(child_, members, z, row_);
    diversity_.replace(z, row_);
    population_.replace(z, child_, f);
    ev.accepted = true;
    ev.replaced_index = z;
  }
  if (config_.fitness == FitnessKind::LeadingOnes && f == config_.n) optimum_found_ = true;

  ev.new_max_fitness = population_.best_fitness();
  ev.consolidated = population_.consolidated();
  ev.s_total = diversity_.total();
  return ev;
}

}  // namespace mpga
