#pragma once
// Full runs of the engine with instrumentation and observers attached.

#include <cstdint>
#include <span>
#include <vector>

#include "mpga/engine.hpp"
#include "mpga/instrumentation.hpp"

namespace mpga {

struct DiversitySnapshot {
  std::uint64_t t = 0;
  std::size_t best_fitness = 0;
  std::uint64_t s_total = 0;
  double d = 0.0;  // 0 for mu < 2
};

/// Observers see every event and snapshot; they get const access only.
class Observer {
 public:
  virtual ~Observer() = default;
  virtual void on_start(const Population& /*initial*/) {}
  virtual void on_iteration(const IterationEvent& /*event*/) {}
  virtual void on_snapshot(const DiversitySnapshot& /*snapshot*/) {}
};

struct RunOptions {
  std::uint64_t trace_every = 0;  // 0 disables snapshots
  bool track_levels = true;
  bool keep_trace = true;
};

struct RunRecord {
  std::uint64_t seed = 0;
  std::uint64_t evaluations = 0;
  std::uint64_t iterations = 0;
  bool censored = false;
  std::size_t best_fitness = 0;
  std::vector<LevelRecord> levels;  // uncensored LeadingOnes runs with track_levels
  std::vector<DiversitySnapshot> trace;
};

/// Steps until an evaluated genome is optimal or the iteration cap is hit.
/// Evaluations = mu + iterations.
RunRecord run(const GaConfig& config, const RunOptions& options = {},
              std::span<Observer* const> observers = {});

}  // namespace mpga
