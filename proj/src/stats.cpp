#include "mpga/stats.hpp"

#include <cmath>

namespace mpga {

void RunningStat::add(double x) {
  ++count_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(count_);
  m2_ += delta * (x - mean_);
}

void RunningStat::merge(const RunningStat& other) {
  if (other.count_ == 0) return;
  if (count_ == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(count_);
  const double nb = static_cast<double>(other.count_);
  const double delta = other.mean_ - mean_;
  const double total = na + nb;
  mean_ += delta * nb / total;
  m2_ += other.m2_ + delta * delta * na * nb / total;
  count_ += other.count_;
}

double RunningStat::variance() const {
  return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0;
}

double RunningStat::sd() const { return std::sqrt(variance()); }

SummaryStats RunningStat::summary() const {
  SummaryStats s;
  s.mean = mean_;
  s.sd = sd();
  s.count = count_;
  s.half_width = count_ > 0 ? 1.96 * s.sd / std::sqrt(static_cast<double>(count_)) : 0.0;
  return s;
}

}  // namespace mpga
