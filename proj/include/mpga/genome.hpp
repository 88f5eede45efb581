#pragma once
// Bit-packed genomes, LeadingOnes / Flat fitness and Hamming geometry.
//
// Positions are 1-based in every public function. Internally position p lives
// in word (p-1)/64 at bit (p-1)%64, so the leading-ones prefix is the run of
// trailing ones of the low words. Bits past n are always zero.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mpga/rng.hpp"

namespace mpga {

class Genome {
 public:
  Genome() = default;
  /// All-zero genome of length n.
  explicit Genome(std::size_t n);

  /// Parses a 0/1 string, position 1 leftmost. Throws std::invalid_argument.
  static Genome from_string(std::string_view bits);
  static Genome ones(std::size_t n);
  static Genome random(std::size_t n, Rng& rng);

  std::size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }
  std::size_t word_count() const { return words_.size(); }

  bool get(std::size_t pos) const;
  void set(std::size_t pos, bool value);
  void flip(std::size_t pos);
  void complement();

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }
  /// Zeroes the unused high bits of the last word after raw word writes.
  void clear_padding();

  std::string to_string() const;

  friend bool operator==(const Genome& a, const Genome& b) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

inline std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

std::size_t leading_ones(const Genome& x);

/// Throws std::invalid_argument on length mismatch.
std::size_t hamming(const Genome& x, const Genome& y);

/// Hamming distance restricted to positions from..n; `from` in [1, n+1].
std::size_t hamming_from(const Genome& x, const Genome& y, std::size_t from);

/// x_{[from:]}; empty when from = n+1. Throws std::out_of_range otherwise.
Genome suffix(const Genome& x, std::size_t from);

enum class FitnessKind { LeadingOnes, Flat };

inline std::size_t evaluate(FitnessKind kind, const Genome& x) {
  return kind == FitnessKind::LeadingOnes ? leading_ones(x) : 0;
}

}  // namespace mpga
