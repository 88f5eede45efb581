#pragma once
// Empirical and exact checks that a k-ary operator is invariant under
// hypercube automorphisms.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mpga/genome.hpp"
#include "mpga/operators.hpp"
#include "mpga/rng.hpp"

namespace mpga {

struct OperatorUnderTest {
  std::string name;
  std::size_t arity = 1;
  std::function<Genome(std::span<const Genome> inputs, Rng& rng)> sample;
  /// Pr(op(inputs) = y); leave empty when there is no closed form.
  std::function<double(std::span<const Genome> inputs, const Genome& y)> probability;
  /// Draws the input tuple; defaults to `arity` independent uniform genomes.
  std::function<std::vector<Genome>(std::size_t n, Rng& rng)> make_inputs;
};

enum class CheckMode { Exact, Sampling };

struct UnbiasedCheckOptions {
  std::size_t n = 8;
  std::size_t automorphisms = 4;
  std::size_t samples = 1'000'000;  // per side, per automorphism (sampling mode)
  double epsilon = 0.01;
  CheckMode mode = CheckMode::Sampling;
};

struct UnbiasedReport {
  double max_deviation = 0.0;  // exact: max |pointwise difference|; sampling: max TV distance
  bool pass = false;
  CheckMode mode_used = CheckMode::Sampling;
  bool fell_back_to_sampling = false;
  std::size_t automorphisms_checked = 0;
};

/// Draws one input tuple, then compares op(x_1..x_k) with
/// pi^{-1}(op(pi(x_1)..pi(x_k))) for random automorphisms pi. Exact mode needs
/// a probability function and n <= 16; otherwise it falls back to sampling.
/// Sampling mode supports n <= 24.
UnbiasedReport check_unbiased(const OperatorUnderTest& op, const UnbiasedCheckOptions& options,
                              Rng& rng);

OperatorUnderTest standard_bit_mutation_operator(double chi, std::size_t n);
OperatorUnderTest uniform_crossover_operator();
/// Tie-breaker as a (mu+2)-ary operator on (x_1..x_mu, offspring, incumbent).
/// The first member equal to the incumbent is removed before scoring; the
/// generated inputs use a copy of x_1 as the incumbent.
OperatorUnderTest tie_breaker_operator(TieBreakKind kind, std::size_t mu);

}  // namespace mpga
