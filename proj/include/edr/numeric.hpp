#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace edr {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kLn2 = 0.69314718055994530941723212145817657;

// log(sum(exp(x_i))) computed against the running maximum so that terms like
// exp(-5000) stay distinguishable. -inf entries are neutral; an empty input
// yields -inf.
double log_sum_exp(std::span<const double> xs);

// Streaming variant used by the quicksort recurrence inner loop.
class LogSumExpAccumulator {
 public:
  void add(double x);
  double value() const;

 private:
  double max_ = -std::numeric_limits<double>::infinity();
  double scaled_sum_ = 0.0;
};

// log(n!) as an accumulated sum of logs (no lgamma).
double log_factorial(std::uint64_t n);

// log(0!), log(1!), ..., log(n!).
std::vector<double> log_factorial_table(std::uint64_t n);

// H_n = sum_{k=1}^n 1/k; H_0 = 0.
double harmonic_number(std::uint64_t n);

}  // namespace edr
