#include "mpga/instrumentation.hpp"

#include <cmath>
#include <stdexcept>

namespace mpga {

LevelTracker::LevelTracker(std::size_t n, std::size_t initial_best, bool initially_consolidated)
    : n_(n), best_(initial_best), levels_(n + 1) {
  if (initial_best > n) throw std::invalid_argument("LevelTracker: initial best exceeds n");
  for (std::size_t i = 0; i <= n; ++i) levels_[i].level = i;
  LevelRecord& start = levels_[best_];
  start.reached = true;
  start.t_in = 0;
  if (initially_consolidated) start.t_cons = 0;
}

void LevelTracker::observe(const IterationEvent& event) {
  const std::size_t f = event.new_max_fitness;
  if (f < best_) throw std::logic_error("LevelTracker: best fitness decreased");
  if (f > n_) throw std::logic_error("LevelTracker: fitness above n");
  if (f > best_) {
    LevelRecord& left = levels_[best_];
    left.t_out = event.t - 1;
    left.succ = f;
    left.d_leave = event.leave_diversity;
    // Left by mutation: either no crossover, or the crossover product alone
    // had not yet passed the level.
    left.essential = !event.used_crossover || event.intermediate_fitness.value_or(0) < best_ + 1;
    left.strange = left.essential && !left.t_cons.has_value();
    best_ = f;
    LevelRecord& entered = levels_[best_];
    entered.reached = true;
    entered.t_in = event.t;
  }
  if (event.consolidated && !levels_[best_].t_cons) levels_[best_].t_cons = event.t;
}

std::vector<LevelRecord> LevelTracker::finalize() const {
  if (best_ != n_) {
    throw std::logic_error("cannot finalize levels of a run that did not reach the optimum");
  }
  std::vector<LevelRecord> out(levels_.begin(), levels_.begin() + static_cast<long>(n_));
  // The optimum ends the run and closes the last essential gap.
  std::size_t next_essential = n_;
  for (std::size_t k = n_; k-- > 0;) {
    LevelRecord& rec = out[k];
    if (!rec.reached) continue;
    rec.esucc = next_essential;
    if (rec.essential) {
      rec.normal = !rec.strange;
      rec.free_riders = *rec.succ - k - 1;
      rec.extra_free_riders = next_essential - *rec.succ;
      next_essential = k;
    }
  }
  return out;
}

std::vector<LevelRecord> finalize_levels(std::size_t n, std::size_t initial_best,
                                         bool initially_consolidated,
                                         std::span<const IterationEvent> events) {
  LevelTracker tracker(n, initial_best, initially_consolidated);
  for (const auto& e : events) tracker.observe(e);
  return tracker.finalize();
}

Telescope telescope(std::span<const LevelRecord> records) {
  Telescope t;
  for (const auto& r : records) {
    if (!r.essential) continue;
    if (!t.first_essential) t.first_essential = r.level;
    t.sum += 1 + r.free_riders + r.extra_free_riders;
  }
  return t;
}

LevelWindow window_for(std::size_t n, double lo_fraction, double hi_fraction) {
  LevelWindow w;
  const double nd = static_cast<double>(n);
  w.lo = static_cast<std::size_t>(std::ceil(lo_fraction * nd));
  w.hi = static_cast<std::size_t>(std::floor(hi_fraction * nd));
  if (n > 0 && w.hi > n - 1) w.hi = n - 1;
  return w;
}

void LevelStats::add(std::span<const LevelRecord> records, LevelWindow window) {
  for (const auto& r : records) {
    if (r.level < window.lo || r.level > window.hi || !r.reached) continue;
    ++reached;
    if (r.succ) ++jumps[*r.succ - r.level];
    if (!r.essential) continue;
    ++essential;
    free_riders_essential.add(static_cast<double>(r.free_riders));
    if (r.strange) {
      ++strange;
      continue;
    }
    ++normal;
    if (r.t_cons && r.t_in) consolidation_time.add(static_cast<double>(*r.t_cons - *r.t_in));
    if (r.d_leave) d_leave_normal.add(*r.d_leave);
    ef_positive_normal.add(r.extra_free_riders >= 1 ? 1.0 : 0.0);
    ef_normal.add(static_cast<double>(r.extra_free_riders));
  }
}

void LevelStats::merge(const LevelStats& other) {
  reached += other.reached;
  essential += other.essential;
  strange += other.strange;
  normal += other.normal;
  consolidation_time.merge(other.consolidation_time);
  d_leave_normal.merge(other.d_leave_normal);
  ef_positive_normal.merge(other.ef_positive_normal);
  ef_normal.merge(other.ef_normal);
  free_riders_essential.merge(other.free_riders_essential);
  for (const auto& [size, count] : other.jumps) jumps[size] += count;
}

double LevelStats::strange_fraction() const {
  return essential > 0 ? static_cast<double>(strange) / static_cast<double>(essential) : 0.0;
}

std::uint64_t LevelStats::jump_count() const {
  std::uint64_t total = 0;
  for (const auto& [size, count] : jumps) total += count;
  return total;
}

double LevelStats::jump_tail(std::size_t j) const {
  const std::uint64_t total = jump_count();
  if (total == 0) return 0.0;
  std::uint64_t at_least = 0;
  for (auto it = jumps.lower_bound(j); it != jumps.end(); ++it) at_least += it->second;
  return static_cast<double>(at_least) / static_cast<double>(total);
}

LevelStats summarize(std::span<const LevelRecord> records, LevelWindow window) {
  if (window.lo > window.hi) throw std::invalid_argument("summarize: empty level window");
  if (records.empty()) throw std::invalid_argument("summarize: no level records");
  LevelStats stats;
  stats.add(records, window);
  return stats;
}

}  // namespace mpga
