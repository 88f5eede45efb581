#include "mpga/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <type_traits>

#include "mpga/config.hpp"
#include "mpga/diversity.hpp"
#include "mpga/rng.hpp"
#include "mpga/theory.hpp"

namespace mpga {

namespace {

std::string number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

template <typename T>
std::string optional_field(const std::optional<T>& v) {
  if (!v) return {};
  if constexpr (std::is_floating_point_v<T>) {
    return number(*v);
  } else {
    return std::to_string(*v);
  }
}

class CsvSink {
 public:
  explicit CsvSink(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
    open(runs_, dir / "runs.csv",
         "run_index,seed,n,mu,chi,pc,adaptive,tie_break,init,evaluations,censored");
    open(levels_, dir / "levels.csv",
         "run_index,level,reached,essential,strange,normal,t_in,t_out,t_cons,succ,esucc,"
         "free_riders,extra_free_riders,d_leave");
    open(diversity_, dir / "diversity.csv", "run_index,t,best_fitness,s_total,d");
  }

  void write(std::size_t k, const GaConfig& c, const RunRecord& r) {
    runs_ << k << ',' << r.seed << ',' << c.n << ',' << c.mu << ',' << number(c.chi) << ','
          << number(c.p_c) << ',' << (c.adaptive_pc ? 1 : 0) << ',' << to_string(c.tie_break)
          << ',' << to_string(c.init) << ',' << r.evaluations << ',' << (r.censored ? 1 : 0)
          << '\n';
    for (const auto& l : r.levels) {
      levels_ << k << ',' << l.level << ',' << int(l.reached) << ',' << int(l.essential) << ','
              << int(l.strange) << ',' << int(l.normal) << ',' << optional_field(l.t_in) << ','
              << optional_field(l.t_out) << ',' << optional_field(l.t_cons) << ','
              << optional_field(l.succ) << ',' << optional_field(l.esucc) << ','
              << l.free_riders << ',' << l.extra_free_riders << ',' << optional_field(l.d_leave)
              << '\n';
    }
    for (const auto& s : r.trace) {
      diversity_ << k << ',' << s.t << ',' << s.best_fitness << ',' << s.s_total << ','
                 << number(s.d) << '\n';
    }
    if (!runs_ || !levels_ || !diversity_) throw IoError("failed writing CSV output");
  }

  void close() {
    runs_.close();
    levels_.close();
    diversity_.close();
    if (runs_.fail() || levels_.fail() || diversity_.fail()) {
      throw IoError("failed closing CSV output");
    }
  }

 private:
  static void open(std::ofstream& f, const std::filesystem::path& path, const char* header) {
    f.open(path, std::ios::out | std::ios::trunc);
    if (!f) throw IoError("cannot open " + path.string() + " for writing");
    f << header << '\n';
  }

  std::ofstream runs_;
  std::ofstream levels_;
  std::ofstream diversity_;
};

}  // namespace

void ExperimentSpec::validate() const {
  base.validate();
  if (runs == 0) throw ConfigError("runs must be at least 1");
  if (!(window_lo >= 0.0 && window_lo < window_hi && window_hi <= 1.0)) {
    throw ConfigError("window must satisfy 0 <= lo < hi <= 1");
  }
}

std::uint64_t ExperimentSpec::trace_stride() const {
  if (trace_every) return *trace_every;
  return std::max<std::uint64_t>(1, base.n / 10);
}

LevelWindow ExperimentSpec::window() const { return window_for(base.n, window_lo, window_hi); }

ExperimentResult run_experiment(const ExperimentSpec& spec, const RunCallback& on_run) {
  spec.validate();
  ExperimentResult result;
  result.runs = spec.runs;
  result.window = spec.window();

  std::optional<CsvSink> sink;
  if (!spec.out_dir.empty()) sink.emplace(spec.out_dir);

  RunOptions options;
  options.trace_every = sink ? spec.trace_stride() : 0;
  options.keep_trace = true;
  options.track_levels = true;

  std::mutex mutex;
  std::map<std::size_t, RunRecord> pending;
  std::size_t next_to_emit = 0;
  std::exception_ptr failure;
  std::atomic<std::size_t> next_run{0};

  auto emit_ready = [&] {
    // Caller holds `mutex`.
    for (auto it = pending.find(next_to_emit); it != pending.end();
         it = pending.find(next_to_emit)) {
      const RunRecord& r = it->second;
      if (r.censored) {
        ++result.censored;
      } else {
        result.evaluations.add(static_cast<double>(r.evaluations));
        result.levels.add(r.levels, result.window);
      }
      if (sink) sink->write(next_to_emit, spec.base, r);
      if (on_run) on_run(next_to_emit, r);
      pending.erase(it);
      ++next_to_emit;
    }
  };

  auto worker = [&] {
    for (;;) {
      const std::size_t k = next_run.fetch_add(1);
      if (k >= spec.runs) return;
      {
        std::lock_guard lock(mutex);
        if (failure) return;
      }
      try {
        GaConfig config = spec.base;
        config.seed = derive_run_seed(spec.base_seed, k);
        RunRecord record = run(config, options);
        std::lock_guard lock(mutex);
        pending.emplace(k, std::move(record));
        emit_ready();
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  std::size_t workers = spec.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, spec.runs);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  if (sink) sink->close();
  return result;
}

std::string format_summary(const ExperimentSpec& spec, const ExperimentResult& result) {
  std::ostringstream out;
  const auto ev = result.evaluations.summary();
  const double n2 = static_cast<double>(spec.base.n) * static_cast<double>(spec.base.n);
  out << "runs: " << result.runs << " (censored: " << result.censored << ")\n";
  out << "evaluations: mean " << ev.mean << " +/- " << ev.half_width << " (sd " << ev.sd
      << ", count " << ev.count << ")\n";
  out << "mean evaluations / n^2: " << ev.mean / n2 << '\n';
  if (spec.base.chi > 0.0) {
    out << "(1+1) EA prediction / n^2: "
        << theory::ea_runtime(static_cast<double>(spec.base.n), spec.base.chi) / n2 << '\n';
  }
  const LevelStats& l = result.levels;
  out << "level window: [" << result.window.lo << ", " << result.window.hi << "]\n";
  out << "essential levels: " << l.essential << ", strange: " << l.strange << " ("
      << l.strange_fraction() << "), normal: " << l.normal << '\n';
  out << "mean free-riders | essential: " << l.free_riders_essential.mean() << '\n';
  out << "mean extra free-riders | normal: " << l.ef_normal.mean()
      << ", Pr(EF >= 1 | normal): " << l.ef_positive_normal.mean() << '\n';
  out << "mean d_leave | normal: " << l.d_leave_normal.mean() << '\n';
  out << "mean consolidation time | normal: " << l.consolidation_time.mean() << '\n';
  out << "Pr(jump >= j):";
  for (std::size_t j = 1; j <= 5; ++j) out << ' ' << j << ':' << l.jump_tail(j);
  out << '\n';
  return out.str();
}

SpeedupReport speedup_from(const RunningStat& a, const RunningStat& b) {
  SpeedupReport r;
  r.a = a.summary();
  r.b = b.summary();
  if (r.a.count == 0 || r.b.count == 0 || r.b.mean == 0.0) return r;
  r.ratio = r.a.mean / r.b.mean;
  const double rel_a = r.a.sd / std::sqrt(static_cast<double>(r.a.count)) / r.a.mean;
  const double rel_b = r.b.sd / std::sqrt(static_cast<double>(r.b.count)) / r.b.mean;
  r.half_width = 1.96 * r.ratio * std::sqrt(rel_a * rel_a + rel_b * rel_b);
  r.significant = r.ratio + r.half_width < 1.0 || r.ratio - r.half_width > 1.0;
  return r;
}

SpeedupReport compare(const ExperimentSpec& a, const ExperimentSpec& b) {
  if (a.base.n != b.base.n) throw ConfigError("compare: both specs must use the same n");
  ExperimentSpec sa = a;
  ExperimentSpec sb = b;
  if (!a.out_dir.empty()) sa.out_dir = a.out_dir / "a";
  if (!b.out_dir.empty()) sb.out_dir = b.out_dir / "b";
  const ExperimentResult ra = run_experiment(sa);
  const ExperimentResult rb = run_experiment(sb);
  SpeedupReport report = speedup_from(ra.evaluations, rb.evaluations);
  report.censored_a = ra.censored;
  report.censored_b = rb.censored;
  return report;
}

std::string format_speedup(const SpeedupReport& r) {
  std::ostringstream out;
  out << "A: mean " << r.a.mean << " +/- " << r.a.half_width << " (" << r.a.count << " runs, "
      << r.censored_a << " censored)\n";
  out << "B: mean " << r.b.mean << " +/- " << r.b.half_width << " (" << r.b.count << " runs, "
      << r.censored_b << " censored)\n";
  out << "ratio A/B: " << r.ratio << " [" << r.ratio - r.half_width << ", "
      << r.ratio + r.half_width << "]" << (r.significant ? " significant" : " not significant")
      << '\n';
  return out.str();
}

double FlatReport::max_relative_error(std::uint64_t min_count) const {
  double worst = 0.0;
  for (const auto& b : bins) {
    if (b.count >= min_count) worst = std::max(worst, b.relative_error);
  }
  return worst;
}

std::size_t FlatReport::bins_with_at_least(std::uint64_t min_count) const {
  return static_cast<std::size_t>(std::count_if(
      bins.begin(), bins.end(), [&](const FlatBin& b) { return b.count >= min_count; }));
}

namespace {

struct BinAccumulator {
  std::uint64_t count = 0;
  double sum_s = 0.0;
  double sum_next = 0.0;
};

class FlatRecorder : public Observer {
 public:
  FlatRecorder(double bin_width, std::map<std::int64_t, BinAccumulator>& bins, double& sum_s,
               std::uint64_t& samples)
      : width_(bin_width), bins_(bins), sum_s_(sum_s), samples_(samples) {}

  void on_start(const Population& initial) override {
    previous_ = s_of_population(initial.members());
  }

  void on_iteration(const IterationEvent& event) override {
    const auto bin = static_cast<std::int64_t>(std::floor(static_cast<double>(previous_) / width_));
    BinAccumulator& acc = bins_[bin];
    ++acc.count;
    acc.sum_s += static_cast<double>(previous_);
    acc.sum_next += static_cast<double>(event.s_total);
    sum_s_ += static_cast<double>(event.s_total);
    ++samples_;
    previous_ = event.s_total;
  }

 private:
  double width_;
  std::map<std::int64_t, BinAccumulator>& bins_;
  double& sum_s_;
  std::uint64_t& samples_;
  std::uint64_t previous_ = 0;
};

}  // namespace

FlatReport flat_experiment(const FlatSpec& spec) {
  if (spec.mu < 2) throw ConfigError("flat experiment needs mu >= 2");
  if (spec.steps == 0 || spec.runs == 0) throw ConfigError("flat experiment needs steps, runs > 0");
  const double length = static_cast<double>(spec.n);
  FlatReport report;
  report.fixed_point = theory::flat_diversity_fixed_point(spec.mu, spec.chi, length);
  report.contraction = theory::flat_diversity_contraction(spec.mu, spec.chi, length);
  report.alpha = theory::flat_diversity_alpha(spec.mu, spec.chi, length);
  const double width =
      spec.bin_width > 0.0 ? spec.bin_width : std::max(1.0, std::floor(report.fixed_point / 32.0));

  std::map<std::int64_t, BinAccumulator> bins;
  double sum_s = 0.0;
  for (std::size_t k = 0; k < spec.runs; ++k) {
    GaConfig config;
    config.n = spec.n;
    config.mu = spec.mu;
    config.chi = spec.chi;
    config.p_c = spec.p_c;
    config.tie_break = spec.tie_break;
    config.init = spec.init;
    config.fitness = FitnessKind::Flat;
    config.max_iterations = spec.steps;
    config.seed = derive_run_seed(spec.base_seed, k);
    FlatRecorder recorder(width, bins, sum_s, report.samples);
    Observer* observers[] = {&recorder};
    RunOptions options;
    options.track_levels = false;
    run(config, options, observers);
  }

  report.time_average_s = report.samples ? sum_s / static_cast<double>(report.samples) : 0.0;
  for (const auto& [index, acc] : bins) {
    FlatBin b;
    b.lo = static_cast<double>(index) * width;
    b.hi = b.lo + width;
    b.count = acc.count;
    b.mean_s = acc.sum_s / static_cast<double>(acc.count);
    b.mean_next = acc.sum_next / static_cast<double>(acc.count);
    b.predicted = theory::flat_diversity_step(b.mean_s, spec.mu, spec.chi, length);
    const double diff = std::abs(b.mean_next - b.predicted);
    b.relative_error = b.predicted != 0.0 ? diff / std::abs(b.predicted) : diff;
    report.bins.push_back(b);
  }
  return report;
}

std::string format_flat(const FlatSpec& spec, const FlatReport& report) {
  std::ostringstream out;
  out << "flat fitness: n=" << spec.n << " mu=" << spec.mu << " chi=" << spec.chi
      << " pc=" << spec.p_c << " steps=" << spec.steps << " runs=" << spec.runs << '\n';
  out << "fixed point S*: " << report.fixed_point << ", time-average S: " << report.time_average_s
      << " (ratio " << (report.fixed_point > 0 ? report.time_average_s / report.fixed_point : 0.0)
      << ")\n";
  out << "contraction: " << report.contraction << ", alpha: " << report.alpha << '\n';
  out << "bin_lo,bin_hi,count,mean_s,mean_next,predicted,relative_error\n";
  for (const auto& b : report.bins) {
    out << b.lo << ',' << b.hi << ',' << b.count << ',' << b.mean_s << ',' << b.mean_next << ','
        << b.predicted << ',' << b.relative_error << '\n';
  }
  return out.str();
}

}  // namespace mpga
