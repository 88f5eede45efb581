#include "mpga/unbiased.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace mpga {

namespace {

constexpr std::size_t kMaxExactN = 16;
constexpr std::size_t kMaxSamplingN = 24;

std::uint64_t index_of(const Genome& g) { return g.word_count() ? g.words()[0] : 0; }

Genome genome_from_index(std::uint64_t idx, std::size_t n) {
  Genome g(n);
  if (n > 0) {
    g.words()[0] = idx;
    g.clear_padding();
  }
  return g;
}

std::vector<Genome> draw_inputs(const OperatorUnderTest& op, std::size_t n, Rng& rng) {
  if (op.make_inputs) {
    auto inputs = op.make_inputs(n, rng);
    if (inputs.size() != op.arity) {
      throw std::logic_error("make_inputs returned the wrong number of inputs");
    }
    return inputs;
  }
  std::vector<Genome> inputs;
  inputs.reserve(op.arity);
  for (std::size_t i = 0; i < op.arity; ++i) inputs.push_back(Genome::random(n, rng));
  return inputs;
}

std::vector<Genome> transform(const Automorphism& pi, std::span<const Genome> inputs) {
  std::vector<Genome> out;
  out.reserve(inputs.size());
  for (const auto& x : inputs) out.push_back(pi.apply(x));
  return out;
}

// Empirical output distribution, optionally pulled back through pi^{-1}.
std::vector<double> histogram(const OperatorUnderTest& op, std::span<const Genome> inputs,
                              std::size_t n, std::size_t samples, const Automorphism* pull_back,
                              Rng& rng) {
  std::vector<std::uint64_t> counts(std::size_t{1} << n, 0);
  // Pull-back is a bijection on outputs, so it is applied once per distinct
  // output value rather than once per sample.
  for (std::size_t s = 0; s < samples; ++s) {
    const Genome y = op.sample(inputs, rng);
    if (y.size() != n) throw std::logic_error("operator output has the wrong length");
    ++counts[index_of(y)];
  }
  std::vector<double> freq(counts.size(), 0.0);
  const double inv = 1.0 / static_cast<double>(samples);
  for (std::uint64_t idx = 0; idx < counts.size(); ++idx) {
    if (counts[idx] == 0) continue;
    std::uint64_t target = idx;
    if (pull_back != nullptr) {
      target = index_of(pull_back->apply_inverse(genome_from_index(idx, n)));
    }
    freq[target] += static_cast<double>(counts[idx]) * inv;
  }
  return freq;
}

double total_variation(const std::vector<double>& p, const std::vector<double>& q) {
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
  return 0.5 * sum;
}

}  // namespace

UnbiasedReport check_unbiased(const OperatorUnderTest& op, const UnbiasedCheckOptions& options,
                              Rng& rng) {
  if (!op.sample) throw std::invalid_argument("check_unbiased: operator has no sampler");
  if (options.n == 0) throw std::invalid_argument("check_unbiased: n must be positive");
  if (options.automorphisms == 0) {
    throw std::invalid_argument("check_unbiased: need at least one automorphism");
  }
  UnbiasedReport report;
  const std::size_t n = options.n;
  const std::vector<Genome> inputs = draw_inputs(op, n, rng);

  const bool exact =
      options.mode == CheckMode::Exact && static_cast<bool>(op.probability) && n <= kMaxExactN;
  report.fell_back_to_sampling = options.mode == CheckMode::Exact && !exact;
  report.mode_used = exact ? CheckMode::Exact : CheckMode::Sampling;

  if (exact) {
    for (std::size_t a = 0; a < options.automorphisms; ++a) {
      const Automorphism pi = Automorphism::random(n, rng);
      const std::vector<Genome> moved = transform(pi, inputs);
      for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
        const Genome y = genome_from_index(idx, n);
        const double lhs = op.probability(inputs, y);
        const double rhs = op.probability(moved, pi.apply(y));
        report.max_deviation = std::max(report.max_deviation, std::abs(lhs - rhs));
      }
      ++report.automorphisms_checked;
    }
    report.pass = report.max_deviation <= options.epsilon;
    return report;
  }

  if (n > kMaxSamplingN) {
    throw std::invalid_argument("check_unbiased: sampling mode supports n <= 24");
  }
  if (options.samples == 0) throw std::invalid_argument("check_unbiased: need samples > 0");
  const std::vector<double> reference = histogram(op, inputs, n, options.samples, nullptr, rng);
  for (std::size_t a = 0; a < options.automorphisms; ++a) {
    const Automorphism pi = Automorphism::random(n, rng);
    const std::vector<Genome> moved = transform(pi, inputs);
    const std::vector<double> pulled = histogram(op, moved, n, options.samples, &pi, rng);
    report.max_deviation = std::max(report.max_deviation, total_variation(reference, pulled));
    ++report.automorphisms_checked;
  }
  report.pass = report.max_deviation < options.epsilon;
  return report;
}

OperatorUnderTest standard_bit_mutation_operator(double chi, std::size_t n) {
  const MutationParams params(chi, n);
  OperatorUnderTest op;
  op.name = "standard bit mutation";
  op.arity = 1;
  op.sample = [params](std::span<const Genome> in, Rng& rng) {
    return mutate(in[0], params, rng);
  };
  op.probability = [params](std::span<const Genome> in, const Genome& y) {
    const auto d = static_cast<double>(hamming(in[0], y));
    const double p = params.rate();
    return std::pow(p, d) * std::pow(1.0 - p, static_cast<double>(y.size()) - d);
  };
  return op;
}

OperatorUnderTest uniform_crossover_operator() {
  OperatorUnderTest op;
  op.name = "uniform crossover";
  op.arity = 2;
  op.sample = [](std::span<const Genome> in, Rng& rng) {
    return uniform_crossover(in[0], in[1], rng);
  };
  return op;
}

OperatorUnderTest tie_breaker_operator(TieBreakKind kind, std::size_t mu) {
  if (mu < 1) throw std::invalid_argument("tie_breaker_operator: mu must be positive");
  OperatorUnderTest op;
  op.name = "tie-breaker";
  op.arity = mu + 2;
  op.sample = [kind, mu](std::span<const Genome> in, Rng& rng) {
    const auto population = in.first(mu);
    const Genome& offspring = in[mu];
    const Genome& incumbent = in[mu + 1];
    std::vector<Genome> members(population.begin(), population.end());
    auto it = std::find(members.begin(), members.end(), incumbent);
    std::size_t index;
    if (it != members.end()) {
      index = static_cast<std::size_t>(it - members.begin());
    } else {
      members.push_back(incumbent);
      index = members.size() - 1;
    }
    return break_tie(kind, members, index, offspring, rng) == TieWinner::Offspring ? offspring
                                                                                 : incumbent;
  };
  op.make_inputs = [mu](std::size_t n, Rng& rng) {
    std::vector<Genome> in;
    for (std::size_t i = 0; i < mu + 1; ++i) in.push_back(Genome::random(n, rng));
    in.push_back(in[0]);
    return in;
  };
  return op;
}

}  // namespace mpga
