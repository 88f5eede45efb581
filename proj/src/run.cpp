#include "mpga/run.hpp"

#include <optional>

namespace mpga {

namespace {

DiversitySnapshot snapshot_of(const Engine& engine) {
  DiversitySnapshot s;
  s.t = engine.iteration();
  s.best_fitness = engine.population().best_fitness();
  s.s_total = engine.diversity().total();
  s.d = engine.current_diversity().value_or(0.0);
  return s;
}

}  // namespace

RunRecord run(const GaConfig& config, const RunOptions& options,
              std::span<Observer* const> observers) {
  Engine engine(config);
  RunRecord record;
  record.seed = config.seed;

  std::optional<LevelTracker> tracker;
  if (options.track_levels && config.fitness == FitnessKind::LeadingOnes) {
    tracker.emplace(config.n, engine.population().best_fitness(),
                    engine.population().consolidated());
  }
  for (Observer* o : observers) o->on_start(engine.population());

  auto take_snapshot = [&] {
    const DiversitySnapshot s = snapshot_of(engine);
    for (Observer* o : observers) o->on_snapshot(s);
    if (options.keep_trace) record.trace.push_back(s);
  };
  if (options.trace_every > 0) take_snapshot();

  const std::uint64_t cap = config.iteration_cap();
  while (!engine.optimum_found() && engine.iteration() < cap) {
    const IterationEvent event = engine.step();
    if (tracker) tracker->observe(event);
    for (Observer* o : observers) o->on_iteration(event);
    if (options.trace_every > 0 && event.t % options.trace_every == 0) take_snapshot();
  }

  record.evaluations = engine.evaluations();
  record.iterations = engine.iteration();
  record.censored = !engine.optimum_found();
  record.best_fitness = engine.population().best_fitness();
  if (tracker && !record.censored) record.levels = tracker->finalize();
  return record;
}

}  // namespace mpga
