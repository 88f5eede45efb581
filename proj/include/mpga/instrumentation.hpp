#pragma once
// Per-fitness-level bookkeeping reconstructed from the engine's event stream:
// reached / essential / strange / normal levels, timestamps, free-riders and
// extra free-riders.
//
// Time t indexes populations: P_0 is the initial population and step t
// produces P_t. For a reached level i, t_out is the last t with F_t <= i, so
// the step that leaves i is t_out + 1 and d_leave = d(P_{t_out}).

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "mpga/engine.hpp"
#include "mpga/stats.hpp"

namespace mpga {

struct LevelRecord {
  std::size_t level = 0;
  bool reached = false;
  std::optional<std::uint64_t> t_in;
  std::optional<std::uint64_t> t_out;
  std::optional<std::uint64_t> t_cons;
  std::optional<std::size_t> succ;
  std::optional<std::size_t> esucc;
  bool essential = false;
  bool strange = false;
  bool normal = false;
  std::size_t free_riders = 0;
  std::size_t extra_free_riders = 0;
  std::optional<double> d_leave;
};

/// Online tracker with O(n) state.
class LevelTracker {
 public:
  LevelTracker(std::size_t n, std::size_t initial_best, bool initially_consolidated);

  void observe(const IterationEvent& event);
  std::size_t best() const { return best_; }

  /// Records for levels 0..n-1. Throws std::logic_error unless the optimum
  /// was reached (censored runs cannot be finalized).
  std::vector<LevelRecord> finalize() const;

 private:
  std::size_t n_;
  std::size_t best_;
  std::vector<LevelRecord> levels_;
};

std::vector<LevelRecord> finalize_levels(std::size_t n, std::size_t initial_best,
                                         bool initially_consolidated,
                                         std::span<const IterationEvent> events);

/// Sum over essential levels of (1 + F_i + EF_i) and the first essential
/// level; the sum equals n - first for every finished run.
struct Telescope {
  std::size_t sum = 0;
  std::optional<std::size_t> first_essential;
};
Telescope telescope(std::span<const LevelRecord> records);

/// Inclusive level range.
struct LevelWindow {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

/// Levels ceil(lo n) .. floor(hi n), clipped to n-1.
LevelWindow window_for(std::size_t n, double lo_fraction, double hi_fraction);

struct LevelStats {
  std::uint64_t reached = 0;
  std::uint64_t essential = 0;
  std::uint64_t strange = 0;
  std::uint64_t normal = 0;
  RunningStat consolidation_time;   // t_cons - t_in over normal levels
  RunningStat d_leave_normal;       // d_leave over normal levels
  RunningStat ef_positive_normal;   // indicator EF_i >= 1 over normal levels
  RunningStat ef_normal;            // EF_i over normal levels
  RunningStat free_riders_essential;
  std::map<std::size_t, std::uint64_t> jumps;  // Succ_i - i over reached levels

  void add(std::span<const LevelRecord> records, LevelWindow window);
  void merge(const LevelStats& other);

  double strange_fraction() const;
  /// Empirical Pr(jump >= j) over the recorded jumps.
  double jump_tail(std::size_t j) const;
  std::uint64_t jump_count() const;
};

/// Throws std::invalid_argument if the window is empty (lo > hi).
LevelStats summarize(std::span<const LevelRecord> records, LevelWindow window);

}  // namespace mpga
