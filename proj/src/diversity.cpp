#include "mpga/diversity.hpp"

#include <stdexcept>

namespace mpga {

std::uint64_t s_of_population(std::span<const Genome> members) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      total += hamming(members[i], members[j]);
    }
  }
  return 2 * total;
}

std::uint64_t s_of_point(const Genome& x, std::span<const Genome> others) {
  std::uint64_t total = 0;
  for (const auto& y : others) total += hamming(x, y);
  return total;
}

double normalized_diversity(std::span<const Genome> members, std::size_t best_fitness) {
  const std::size_t mu = members.size();
  if (mu < 2) {
    throw std::invalid_argument("normalized_diversity needs at least two members");
  }
  const std::size_t n = members.front().size();
  if (best_fitness + 1 >= n) return 0.0;
  const std::size_t from = best_fitness + 2;
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < mu; ++i) {
    for (std::size_t j = i + 1; j < mu; ++j) {
      s += hamming_from(members[i], members[j], from);
    }
  }
  const double denom = static_cast<double>(mu) * static_cast<double>(mu - 1) *
                       static_cast<double>(n - best_fitness - 1);
  return 2.0 * static_cast<double>(s) / denom;
}

DiversityState::DiversityState(std::span<const Genome> members)
    : mu_(members.size()), matrix_(mu_ * mu_, 0), row_sums_(mu_, 0) {
  for (std::size_t i = 0; i < mu_; ++i) {
    for (std::size_t j = i + 1; j < mu_; ++j) {
      const auto h = static_cast<std::uint32_t>(hamming(members[i], members[j]));
      matrix_[i * mu_ + j] = h;
      matrix_[j * mu_ + i] = h;
      row_sums_[i] += h;
      row_sums_[j] += h;
    }
  }
  for (auto r : row_sums_) total_ += r;
}

void DiversityState::distances(const Genome& y, std::span<const Genome> members,
                               std::size_t skip, std::span<std::uint32_t> out) {
  for (std::size_t j = 0; j < members.size(); ++j) {
    out[j] = j == skip ? 0u : static_cast<std::uint32_t>(hamming(y, members[j]));
  }
}

void DiversityState::replace(std::size_t index, std::span<const std::uint32_t> row) {
  if (index >= mu_ || row.size() != mu_) {
    throw std::invalid_argument("DiversityState::replace: bad index or row size");
  }
  std::uint64_t new_sum = 0;
  for (std::size_t j = 0; j < mu_; ++j) {
    if (j == index) continue;
    const std::uint32_t old = matrix_[index * mu_ + j];
    const std::uint32_t h = row[j];
    row_sums_[j] = row_sums_[j] - old + h;
    matrix_[index * mu_ + j] = h;
    matrix_[j * mu_ + index] = h;
    new_sum += h;
  }
  total_ = total_ - 2 * row_sums_[index] + 2 * new_sum;
  row_sums_[index] = new_sum;
}

}  // namespace mpga
