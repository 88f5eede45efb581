#pragma once

#include <cstddef>
#include <cstdint>

namespace mpga {

struct SummaryStats {
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation
  std::uint64_t count = 0;
  double half_width = 0.0;  // 1.96 sd / sqrt(count)
};

/// Welford accumulator; merge() uses the Chan et al. pairwise update.
class RunningStat {
 public:
  void add(double x);
  void merge(const RunningStat& other);

  std::uint64_t count() const { return count_; }
  double mean() const { return mean_; }
  double variance() const;
  double sd() const;
  SummaryStats summary() const;

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

}  // namespace mpga
