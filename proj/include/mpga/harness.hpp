#pragma once
// Experiment orchestration: seeded multi-run experiments, CSV output,
// runtime comparisons and the flat-fitness diversity experiment.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpga/engine.hpp"
#include "mpga/instrumentation.hpp"
#include "mpga/run.hpp"
#include "mpga/stats.hpp"

namespace mpga {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentSpec {
  GaConfig base;
  std::size_t runs = 1;
  std::uint64_t base_seed = 0;
  std::optional<std::uint64_t> trace_every;  // default n/10; 0 disables the trace
  double window_lo = 0.1;
  double window_hi = 0.9;
  std::filesystem::path out_dir;  // empty: no files are written
  std::size_t workers = 0;        // 0: one per hardware thread

  /// Throws ConfigError.
  void validate() const;
  std::uint64_t trace_stride() const;
  LevelWindow window() const;
};

struct ExperimentResult {
  std::size_t runs = 0;
  std::size_t censored = 0;
  RunningStat evaluations;  // uncensored runs only
  LevelStats levels;        // aggregated over `window`
  LevelWindow window;
};

/// Called once per run, in run-index order, from the aggregating thread.
using RunCallback = std::function<void(std::size_t run_index, const RunRecord& record)>;

/// Runs `spec.runs` independent runs; run k is seeded with
/// derive_run_seed(base_seed, k). Writes runs.csv, levels.csv and
/// diversity.csv when out_dir is set. Output and aggregation happen in
/// run-index order, so results do not depend on the worker count.
ExperimentResult run_experiment(const ExperimentSpec& spec, const RunCallback& on_run = {});

std::string format_summary(const ExperimentSpec& spec, const ExperimentResult& result);

struct SpeedupReport {
  SummaryStats a;
  SummaryStats b;
  double ratio = 1.0;       // mean_T(A) / mean_T(B)
  double half_width = 0.0;  // delta-method 95% half-width
  bool significant = false;  // CI excludes 1
  std::size_t censored_a = 0;
  std::size_t censored_b = 0;
};

/// Throws ConfigError when the two specs use different n.
SpeedupReport compare(const ExperimentSpec& a, const ExperimentSpec& b);

/// Ratio of two independent means with a delta-method confidence interval.
SpeedupReport speedup_from(const RunningStat& a, const RunningStat& b);

std::string format_speedup(const SpeedupReport& report);

struct FlatSpec {
  std::size_t n = 1000;
  std::size_t mu = 2;
  double chi = 1.0;
  double p_c = 0.0;
  std::uint64_t steps = 1'000'000;
  std::size_t runs = 1;
  std::uint64_t base_seed = 0;
  TieBreakKind tie_break = TieBreakKind::OffspringFavoring;
  InitMode init = InitMode::AllZeros;
  double bin_width = 0.0;  // 0: max(1, floor(S* / 32))
};

struct FlatBin {
  double lo = 0.0;
  double hi = 0.0;
  std::uint64_t count = 0;
  double mean_s = 0.0;
  double mean_next = 0.0;
  double predicted = 0.0;
  double relative_error = 0.0;
};

struct FlatReport {
  std::vector<FlatBin> bins;
  std::uint64_t samples = 0;
  double time_average_s = 0.0;
  double fixed_point = 0.0;
  double contraction = 0.0;
  double alpha = 0.0;

  /// Largest relative error over bins with at least `min_count` samples.
  double max_relative_error(std::uint64_t min_count) const;
  std::size_t bins_with_at_least(std::uint64_t min_count) const;
};

/// Runs the GA on Flat fitness and compares the binned one-step conditional
/// mean of S with the affine recursion, and the time-average of S with its
/// fixed point. S is taken over the full genome (length N = n).
FlatReport flat_experiment(const FlatSpec& spec);

std::string format_flat(const FlatSpec& spec, const FlatReport& report);

}  // namespace mpga
