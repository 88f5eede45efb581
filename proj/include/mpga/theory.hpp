#pragma once
// Leading-order runtime and diversity predictions for the (mu+1) GA on
// LeadingOnes. All values drop o(n^2) / o(1) terms.

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

namespace mpga::theory {

/// Per-level rate m(x) on [0, 1]: a constant or a piecewise-linear table.
class RatePredicate {
 public:
  static RatePredicate constant(double c);
  /// Throws std::invalid_argument unless x is strictly increasing from 0 to 1
  /// and every value is non-negative.
  static RatePredicate tabulated(std::vector<std::pair<double, double>> grid);

  double operator()(double x) const;
  bool is_constant() const { return std::holds_alternative<double>(rep_); }

 private:
  explicit RatePredicate(std::variant<double, std::vector<std::pair<double, double>>> rep)
      : rep_(std::move(rep)) {}
  std::variant<double, std::vector<std::pair<double, double>>> rep_;
};

/// (e^chi - 1) / (2 chi^2) n^2, the (1+1) EA runtime.
double ea_runtime(double n, double chi);

/// (n^2 / chi) * integral_0^1 e^{chi x} / (2 + m(x)) dx by composite Simpson,
/// starting at 1025 nodes and doubling until successive estimates agree to
/// 1e-11 relative.
double runtime_integral(const RatePredicate& m, double n, double chi);

/// 2 / (2 + p_c (1 - p_c) / (12 - 8 p_c)).
double tiebreak_speedup_bound(double p_c);

/// (1 - p_c) / (3 - 2 p_c).
double plateau_diversity_bound(double p_c);

/// p_c d / 8.
double ef_probability_bound(double p_c, double d);

/// p_c (1 - p_c) / (12 - 8 p_c), the lower bound on E[EF_i | N_i].
double tiebreak_extra_free_rider_rate(double p_c);

/// E[S(Q_{t+1}) | S(Q_t) = s] for neutral drift of mu strings of length N.
double flat_diversity_step(double s, std::size_t mu, double chi, double length);

/// Contraction factor 1 - 2/mu^2 - 4 (mu-1) chi / (mu^2 N) of the recursion.
double flat_diversity_contraction(std::size_t mu, double chi, double length);

/// Fixed point of flat_diversity_step.
double flat_diversity_fixed_point(std::size_t mu, double chi, double length);

/// 2 (mu-1) mu^2 chi N / (N + 4 (mu-1) chi).
double flat_diversity_alpha(std::size_t mu, double chi, double length);

/// Mean of the jump J with Pr(J = j) = 2^-j for j < r and
/// Pr(J = r) = 2^-(r-1): 2 - 2^-(r-1).
double truncated_jump_mean(std::size_t remaining);

}  // namespace mpga::theory
