#pragma once
// Sums of pairwise Hamming distances: S(P) over ordered pairs, S_P(x), and the
// normalized suffix diversity d_t.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mpga/genome.hpp"

namespace mpga {

/// Sum of H(x, y) over all ordered pairs of members.
std::uint64_t s_of_population(std::span<const Genome> members);

/// Sum of H(x, y) over y in `others`.
std::uint64_t s_of_point(const Genome& x, std::span<const Genome> others);

/// S(P') / (mu (mu-1) (n-F-1)) where P' holds the suffixes from position F+2.
/// Returns 0 when the suffix is empty (F >= n-1). Throws if fewer than two members.
double normalized_diversity(std::span<const Genome> members, std::size_t best_fitness);

/// Pairwise distance matrix with per-row sums, updated in O(mu) kernel calls
/// per replacement.
class DiversityState {
 public:
  DiversityState() = default;
  explicit DiversityState(std::span<const Genome> members);

  std::size_t size() const { return mu_; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return matrix_[i * mu_ + j]; }
  /// S_P(x_i).
  std::uint64_t row_sum(std::size_t i) const { return row_sums_[i]; }
  /// S(P).
  std::uint64_t total() const { return total_; }

  /// Distances from `y` to every member; out[skip] is set to 0 and not computed.
  static void distances(const Genome& y, std::span<const Genome> members, std::size_t skip,
                        std::span<std::uint32_t> out);

  /// Replaces member `index`; row[j] = H(new member, x_j) for j != index.
  void replace(std::size_t index, std::span<const std::uint32_t> row);

  friend bool operator==(const DiversityState&, const DiversityState&) = default;

 private:
  std::size_t mu_ = 0;
  std::vector<std::uint32_t> matrix_;
  std::vector<std::uint64_t> row_sums_;
  std::uint64_t total_ = 0;
};

}  // namespace mpga
