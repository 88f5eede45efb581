// mpga: command-line front end.
//
//   mpga run            repeated runs on LeadingOnes, CSV output, summary
//   mpga flat           diversity drift on a flat fitness landscape
//   mpga theory         leading-order predictions
//   mpga check-unbiased automorphism-invariance check of an operator
//   mpga compare        runtime ratio of two configurations
//
// Exit codes: 0 success, 1 configuration error, 2 I/O error,
// 3 check-unbiased rejected the operator.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mpga/config.hpp"
#include "mpga/harness.hpp"
#include "mpga/simd.hpp"
#include "mpga/theory.hpp"
#include "mpga/unbiased.hpp"

namespace {

using mpga::Settings;

// Flags given on the command line, keyed like the config file.
struct FlagSet {
  Settings values;
  std::string config_path;
};

void add_value_flag(CLI::App* app, FlagSet& flags, const std::string& key,
                    const std::string& help) {
  app->add_option_function<std::string>(
      "--" + key, [&flags, key](const std::string& v) { flags.values[key] = v; }, help);
}

void add_experiment_flags(CLI::App* app, FlagSet& flags, bool with_config = true) {
  if (with_config) {
    app->add_option("--config", flags.config_path, "key = value file; flags override it");
  }
  add_value_flag(app, flags, "n", "string length");
  add_value_flag(app, flags, "mu", "population size");
  add_value_flag(app, flags, "chi", "mutation rate is chi/n");
  add_value_flag(app, flags, "pc", "crossover probability");
  add_value_flag(app, flags, "tie-break", "offspring | uniform | diversity");
  add_value_flag(app, flags, "init", "zeros | random");
  app->add_flag_callback(
      "--adaptive-pc", [&flags] { flags.values["adaptive-pc"] = "true"; },
      "crossover only while the population is not consolidated");
  add_value_flag(app, flags, "max-iterations", "iteration cap per run (default 100 n^2)");
  add_value_flag(app, flags, "runs", "number of independent runs");
  add_value_flag(app, flags, "seed", "base seed");
  add_value_flag(app, flags, "trace-every", "diversity snapshot stride, 0 disables");
  add_value_flag(app, flags, "window-lo", "lower level fraction for summaries");
  add_value_flag(app, flags, "window-hi", "upper level fraction for summaries");
  add_value_flag(app, flags, "out", "output directory for CSV files");
  add_value_flag(app, flags, "workers", "worker threads, 0 = hardware concurrency");
}

mpga::ExperimentSpec build_spec(const FlagSet& flags, mpga::ExperimentSpec spec = {},
                                const std::string& config_path = {}) {
  const std::string& path = config_path.empty() ? flags.config_path : config_path;
  if (!path.empty()) mpga::apply_settings(spec, mpga::read_config_file(path));
  mpga::apply_settings(spec, flags.values);
  spec.validate();
  return spec;
}

int cmd_run(const FlagSet& flags) {
  const mpga::ExperimentSpec spec = build_spec(flags);
  const mpga::ExperimentResult result = mpga::run_experiment(spec);
  std::cout << mpga::format_summary(spec, result);
  if (!spec.out_dir.empty()) std::cout << "wrote CSV files to " << spec.out_dir.string() << '\n';
  return 0;
}

int cmd_flat(const FlagSet& flags, std::uint64_t steps, double bin_width,
             std::uint64_t min_count) {
  mpga::ExperimentSpec defaults;
  defaults.base.n = 1000;
  defaults.base.mu = 2;
  const mpga::ExperimentSpec spec = build_spec(flags, defaults);
  mpga::FlatSpec flat;
  flat.n = spec.base.n;
  flat.mu = spec.base.mu;
  flat.chi = spec.base.chi;
  flat.p_c = spec.base.p_c;
  flat.tie_break = spec.base.tie_break;
  flat.init = spec.base.init;
  flat.runs = spec.runs;
  flat.base_seed = spec.base_seed;
  flat.steps = steps;
  flat.bin_width = bin_width;
  const mpga::FlatReport report = mpga::flat_experiment(flat);
  std::cout << mpga::format_flat(flat, report);
  std::cout << "max relative error over bins with >= " << min_count
            << " samples: " << report.max_relative_error(min_count) << " ("
            << report.bins_with_at_least(min_count) << " bins)\n";
  return 0;
}

mpga::theory::RatePredicate read_rate_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mpga::IoError("cannot read rate table " + path);
  std::vector<std::pair<double, double>> grid;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    double x = 0.0;
    double m = 0.0;
    if (!(fields >> x)) continue;
    if (!(fields >> m)) throw mpga::ConfigError("rate table line needs two numbers: " + line);
    grid.emplace_back(x, m);
  }
  return mpga::theory::RatePredicate::tabulated(std::move(grid));
}

struct TheoryArgs {
  double n = 1000;
  double chi = 1.0;
  double m = 0.0;
  std::string table;
  double p_c = 0.6;
  std::size_t mu = 2;
};

int cmd_theory(const TheoryArgs& a) {
  namespace th = mpga::theory;
  if (!(a.n > 0) || !(a.chi > 0)) throw mpga::ConfigError("theory needs n > 0 and chi > 0");
  if (!(a.p_c >= 0.0 && a.p_c < 1.0)) throw mpga::ConfigError("pc must lie in [0, 1)");
  const th::RatePredicate m =
      a.table.empty() ? th::RatePredicate::constant(a.m) : read_rate_table(a.table);
  const double n2 = a.n * a.n;
  const double ea = th::ea_runtime(a.n, a.chi);
  const double integral = th::runtime_integral(m, a.n, a.chi);
  std::cout << "n = " << a.n << ", chi = " << a.chi << ", pc = " << a.p_c << ", mu = " << a.mu
            << '\n';
  std::cout << "(1+1) EA runtime: " << ea << " (" << ea / n2 << " n^2)\n";
  std::cout << "runtime with extra free-rider rate m: " << integral << " (" << integral / n2
            << " n^2, ratio " << integral / ea << ")\n";
  std::cout << "tie-breaker speedup bound: " << th::tiebreak_speedup_bound(a.p_c) << '\n';
  std::cout << "extra free-rider rate lower bound: " << th::tiebreak_extra_free_rider_rate(a.p_c)
            << '\n';
  std::cout << "plateau diversity bound: " << th::plateau_diversity_bound(a.p_c) << '\n';
  if (a.mu >= 2) {
    std::cout << "flat fixed point S*: " << th::flat_diversity_fixed_point(a.mu, a.chi, a.n)
              << " (contraction " << th::flat_diversity_contraction(a.mu, a.chi, a.n) << ")\n";
  }
  return 0;
}

struct UnbiasedArgs {
  std::string op = "mutation";
  std::size_t n = 8;
  std::size_t mu = 2;
  double chi = 1.0;
  std::size_t samples = 1'000'000;
  std::size_t automorphisms = 4;
  double epsilon = 0.01;
  bool exact = false;
  std::uint64_t seed = 1;
};

int cmd_check_unbiased(const UnbiasedArgs& a) {
  mpga::OperatorUnderTest op;
  if (a.op == "mutation") {
    op = mpga::standard_bit_mutation_operator(a.chi, a.n);
  } else if (a.op == "crossover") {
    op = mpga::uniform_crossover_operator();
  } else if (a.op == "tiebreak-diversity") {
    op = mpga::tie_breaker_operator(mpga::TieBreakKind::DiversityImproving, a.mu);
  } else if (a.op == "tiebreak-uniform") {
    op = mpga::tie_breaker_operator(mpga::TieBreakKind::Uniform, a.mu);
  } else {
    throw mpga::ConfigError("unknown operator '" + a.op + "'");
  }
  mpga::UnbiasedCheckOptions options;
  options.n = a.n;
  options.samples = a.samples;
  options.automorphisms = a.automorphisms;
  options.epsilon = a.epsilon;
  options.mode = a.exact ? mpga::CheckMode::Exact : mpga::CheckMode::Sampling;
  mpga::Rng rng(a.seed);
  const mpga::UnbiasedReport r = mpga::check_unbiased(op, options, rng);
  std::cout << op.name << ": " << (r.mode_used == mpga::CheckMode::Exact ? "exact" : "sampling")
            << (r.fell_back_to_sampling ? " (fallback)" : "") << ", "
            << r.automorphisms_checked << " automorphisms, max deviation " << r.max_deviation
            << " -> " << (r.pass ? "PASS" : "FAIL") << '\n';
  return r.pass ? 0 : 3;
}

int cmd_compare(const FlagSet& flags, const std::string& config_a, const std::string& config_b) {
  mpga::ExperimentSpec a = build_spec(flags, {}, config_a);
  mpga::ExperimentSpec b = build_spec(flags, {}, config_b);
  const mpga::SpeedupReport report = mpga::compare(a, b);
  std::cout << mpga::format_speedup(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(mu+1) GA on LeadingOnes: simulation, diversity and runtime predictions"};
  app.require_subcommand(1);
  std::string simd;
  app.add_option("--simd", simd, "kernel ISA: scalar | avx2 | avx512");

  FlagSet run_flags;
  auto* run = app.add_subcommand("run", "repeated runs with CSV output");
  add_experiment_flags(run, run_flags);

  FlagSet flat_flags;
  std::uint64_t steps = 1'000'000;
  double bin_width = 0.0;
  std::uint64_t min_count = 10'000;
  auto* flat = app.add_subcommand("flat", "diversity drift on flat fitness");
  add_experiment_flags(flat, flat_flags);
  flat->add_option("--steps", steps, "iterations per run")->capture_default_str();
  flat->add_option("--bin-width", bin_width, "S bin width, 0 = automatic");
  flat->add_option("--min-count", min_count, "bins reported in the error summary")
      ->capture_default_str();

  TheoryArgs theory_args;
  auto* theory = app.add_subcommand("theory", "leading-order predictions");
  theory->add_option("--n", theory_args.n, "string length")->capture_default_str();
  theory->add_option("--chi", theory_args.chi, "mutation rate is chi/n")->capture_default_str();
  theory->add_option("--m", theory_args.m, "constant extra free-rider rate");
  theory->add_option("--m-table", theory_args.table, "file of 'x m(x)' rows on [0, 1]");
  theory->add_option("--pc", theory_args.p_c, "crossover probability")->capture_default_str();
  theory->add_option("--mu", theory_args.mu, "population size")->capture_default_str();

  UnbiasedArgs ub;
  auto* check = app.add_subcommand("check-unbiased", "automorphism invariance of an operator");
  check->add_option("--operator", ub.op)
      ->check(CLI::IsMember({"mutation", "crossover", "tiebreak-diversity", "tiebreak-uniform"}))
      ->capture_default_str();
  check->add_option("--n", ub.n, "string length")->capture_default_str();
  check->add_option("--mu", ub.mu, "population size for tie-breakers")->capture_default_str();
  check->add_option("--chi", ub.chi, "mutation rate is chi/n")->capture_default_str();
  check->add_option("--samples", ub.samples, "samples per side")->capture_default_str();
  check->add_option("--automorphisms", ub.automorphisms)->capture_default_str();
  check->add_option("--epsilon", ub.epsilon, "tolerance")->capture_default_str();
  check->add_flag("--exact", ub.exact, "exact output law (mutation only)");
  check->add_option("--seed", ub.seed)->capture_default_str();

  FlagSet cmp_flags;
  std::string config_a;
  std::string config_b;
  auto* cmp = app.add_subcommand("compare", "runtime ratio of two configurations");
  cmp->add_option("--config-a", config_a, "configuration A")->required();
  cmp->add_option("--config-b", config_b, "configuration B")->required();
  add_experiment_flags(cmp, cmp_flags, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (!simd.empty()) {
      const auto isa = mpga::simd::parse_isa(simd);
      if (!isa) throw mpga::ConfigError("unknown ISA '" + simd + "'");
      if (!mpga::simd::select(*isa)) throw mpga::ConfigError(simd + " kernels are not available on this machine");
    }
    if (*run) return cmd_run(run_flags);
    if (*flat) return cmd_flat(flat_flags, steps, bin_width, min_count);
    if (*theory) return cmd_theory(theory_args);
    if (*check) return cmd_check_unbiased(ub);
    if (*cmp) return cmd_compare(cmp_flags, config_a, config_b);
  } catch (const mpga::IoError& e) {
    std::cerr << "mpga: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "mpga: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
