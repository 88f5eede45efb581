#include "mpga/theory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mpga::theory {

namespace {

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + ": probability must lie in [0, 1]");
  }
}

void check_flat(std::size_t mu, double chi, double length) {
  if (mu < 2) throw std::invalid_argument("flat diversity: mu must be at least 2");
  if (!(length >= 1.0)) throw std::invalid_argument("flat diversity: length must be >= 1");
  if (!(chi >= 0.0)) throw std::invalid_argument("flat diversity: chi must be non-negative");
}

double simpson(const RatePredicate& m, double chi, std::size_t intervals) {
  const double h = 1.0 / static_cast<double>(intervals);
  auto g = [&](double x) { return std::exp(chi * x) / (2.0 + m(x)); };
  double odd = 0.0;
  double even = 0.0;
  for (std::size_t k = 1; k < intervals; ++k) {
    const double x = static_cast<double>(k) * h;
    (k % 2 == 1 ? odd : even) += g(x);
  }
  return h / 3.0 * (g(0.0) + g(1.0) + 4.0 * odd + 2.0 * even);
}

}  // namespace

RatePredicate RatePredicate::constant(double c) {
  if (!(c >= 0.0)) throw std::invalid_argument("rate predicate: value must be non-negative");
  return RatePredicate(c);
}

RatePredicate RatePredicate::tabulated(std::vector<std::pair<double, double>> grid) {
  if (grid.size() < 2) throw std::invalid_argument("rate predicate: need at least two nodes");
  if (grid.front().first != 0.0 || grid.back().first != 1.0) {
    throw std::invalid_argument("rate predicate: grid must span [0, 1]");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i].second >= 0.0)) {
      throw std::invalid_argument("rate predicate: values must be non-negative");
    }
    if (i > 0 && !(grid[i].first > grid[i - 1].first)) {
      throw std::invalid_argument("rate predicate: x must be strictly increasing");
    }
  }
  return RatePredicate(std::move(grid));
}

double RatePredicate::operator()(double x) const {
  if (const double* c = std::get_if<double>(&rep_)) return *c;
  const auto& grid = std::get<std::vector<std::pair<double, double>>>(rep_);
  if (x <= grid.front().first) return grid.front().second;
  if (x >= grid.back().first) return grid.back().second;
  const auto hi = std::upper_bound(grid.begin(), grid.end(), x,
                                   [](double v, const auto& node) { return v < node.first; });
  const auto lo = hi - 1;
  const double w = (x - lo->first) / (hi->first - lo->first);
  return lo->second + w * (hi->second - lo->second);
}

double ea_runtime(double n, double chi) {
  if (!(chi > 0.0)) throw std::invalid_argument("ea_runtime: chi must be positive");
  return std::expm1(chi) / (2.0 * chi * chi) * n * n;
}

double runtime_integral(const RatePredicate& m, double n, double chi) {
  if (!(chi > 0.0)) throw std::invalid_argument("runtime_integral: chi must be positive");
  constexpr std::size_t kMaxIntervals = std::size_t{1} << 22;
  std::size_t intervals = 1024;
  double previous = simpson(m, chi, intervals);
  while (intervals < kMaxIntervals) {
    intervals *= 2;
    const double next = simpson(m, chi, intervals);
    const bool converged = std::abs(next - previous) <= 1e-11 * std::abs(next);
    previous = next;
    if (converged) break;
  }
  return n * n / chi * previous;
}

double tiebreak_speedup_bound(double p_c) {
  check_probability(p_c, "tiebreak_speedup_bound");
  return 2.0 / (2.0 + tiebreak_extra_free_rider_rate(p_c));
}

double tiebreak_extra_free_rider_rate(double p_c) {
  check_probability(p_c, "tiebreak_extra_free_rider_rate");
  return p_c * (1.0 - p_c) / (12.0 - 8.0 * p_c);
}

double plateau_diversity_bound(double p_c) {
  check_probability(p_c, "plateau_diversity_bound");
  return (1.0 - p_c) / (3.0 - 2.0 * p_c);
}

double ef_probability_bound(double p_c, double d) {
  check_probability(p_c, "ef_probability_bound");
  check_probability(d, "ef_probability_bound");
  return p_c * d / 8.0;
}

double flat_diversity_contraction(std::size_t mu, double chi, double length) {
  check_flat(mu, chi, length);
  const double m = static_cast<double>(mu);
  return 1.0 - 2.0 / (m * m) - 4.0 * (m - 1.0) * chi / (m * m * length);
}

double flat_diversity_step(double s, std::size_t mu, double chi, double length) {
  return flat_diversity_contraction(mu, chi, length) * s +
         2.0 * (static_cast<double>(mu) - 1.0) * chi;
}

double flat_diversity_fixed_point(std::size_t mu, double chi, double length) {
  const double contraction = flat_diversity_contraction(mu, chi, length);
  return 2.0 * (static_cast<double>(mu) - 1.0) * chi / (1.0 - contraction);
}

double flat_diversity_alpha(std::size_t mu, double chi, double length) {
  check_flat(mu, chi, length);
  const double m = static_cast<double>(mu);
  return 2.0 * (m - 1.0) * m * m * chi * length / (length + 4.0 * (m - 1.0) * chi);
}

double truncated_jump_mean(std::size_t remaining) {
  if (remaining == 0) throw std::invalid_argument("truncated_jump_mean: remaining must be >= 1");
  return 2.0 - std::ldexp(1.0, -static_cast<int>(std::min<std::size_t>(remaining - 1, 2000)));
}

}  // namespace mpga::theory
