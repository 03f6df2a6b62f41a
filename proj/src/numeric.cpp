#include "edr/numeric.hpp"

#include <cmath>

namespace edr {

void LogSumExpAccumulator::add(double x) {
  if (std::isinf(x) && x < 0) return;
  if (x <= max_) {
    scaled_sum_ += std::exp(x - max_);
    return;
  }
  // New maximum: rescale the accumulated sum.
  if (std::isinf(max_)) {
    scaled_sum_ = 1.0;
  } else {
    scaled_sum_ = scaled_sum_ * std::exp(max_ - x) + 1.0;
  }
  max_ = x;
}

double LogSumExpAccumulator::value() const {
  if (std::isinf(max_)) return max_;
  return max_ + std::log(scaled_sum_);
}

double log_sum_exp(std::span<const double> xs) {
  LogSumExpAccumulator acc;
  for (double x : xs) acc.add(x);
  return acc.value();
}

double log_factorial(std::uint64_t n) {
  double acc = 0.0;
  for (std::uint64_t k = 2; k <= n; ++k) acc += std::log(static_cast<double>(k));
  return acc;
}

std::vector<double> log_factorial_table(std::uint64_t n) {
  std::vector<double> table(n + 1, 0.0);
  for (std::uint64_t k = 2; k <= n; ++k) {
    table[k] = table[k - 1] + std::log(static_cast<double>(k));
  }
  return table;
}

double harmonic_number(std::uint64_t n) {
  // Summed smallest-first so the tiny terms are not absorbed by 1.0 early.
  double acc = 0.0;
  for (std::uint64_t k = n; k >= 1; --k) acc += 1.0 / static_cast<double>(k);
  return acc;
}

}  // namespace edr
