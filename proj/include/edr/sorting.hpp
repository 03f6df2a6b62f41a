#pragma once

#include "edr/discount.hpp"

#include <cstdint>
#include <vector>

namespace edr {

enum class SortAlgorithm { Mergesort, Quicksort };

// Comparison cost of top-down mergesort where merging subarrays of sizes a
// and b always charges a + b. Input-independent:
//   n * ceil(lg n) + n - 2^{ceil(lg n)}  for n >= 1, and 0 for n <= 1.
std::uint64_t mergesort_cost(std::uint64_t n);

// The same quantity as a sum: sum_{k=1}^{n-1} (floor(lg k) + 2).
std::uint64_t mergesort_cost_sum_form(std::uint64_t n);

// log of the mergesort score, exact in the log domain for any n.
double mergesort_log_score(std::uint64_t n, const DiscountSpec& spec);
// exp of the above; may underflow to 0 for large n (use the log form there).
double mergesort_score(std::uint64_t n, const DiscountSpec& spec);

// Per-length scores s_0..s_max, held in the log domain so that values like
// e^{-5000} stay meaningful well past n = 10^4.
class ScoreTable {
 public:
  ScoreTable(SortAlgorithm alg, std::vector<double> log_values);
  SortAlgorithm algorithm() const { return alg_; }
  std::size_t max_n() const { return log_values_.size() - 1; }
  double log_at(std::size_t n) const;
  double at(std::size_t n) const;

 private:
  SortAlgorithm alg_;
  std::vector<double> log_values_;
};

ScoreTable mergesort_score_table(std::size_t n_max, const DiscountSpec& spec);

// Quicksort expected score per length from the convolution recurrence
//   q_0 = 1,  q_n = (e^{-lambda(n+1)} / n) * sum_{k=1}^{n} q_{k-1} q_{n-k},
// evaluated entirely in the log domain (O(n^2)).
ScoreTable quicksort_score_table(std::size_t n_max, const DiscountSpec& spec);

// Independent oracle: enumerate all n! permutations, run the instrumented
// quicksort, and average the discount factors directly. Requires n <= 9.
double quicksort_score_bruteforce(std::size_t n, const DiscountSpec& spec);

// Expected quicksort comparisons on a uniform permutation:
//   2 (n+1) (H_{n+1} - 1).
double quicksort_avg_cost(std::uint64_t n);

// Closed-form sandwich bounds on the per-length scores, computed via an
// accumulated log-factorial (never through lgamma or linear-domain powers).
struct ScoreBounds {
  double log_lower;
  double log_upper;
  double lower() const;
  double upper() const;
};

// Valid for n >= 1 (any lambda > 0).
ScoreBounds mergesort_score_bounds(std::uint64_t n, const DiscountSpec& spec);
// Valid for n >= 0 and 0 < lambda <= ln 2; the lower bound is strict.
ScoreBounds quicksort_score_bounds(std::uint64_t n, const DiscountSpec& spec);

// Runs the instrumented algorithm on a permutation of {1..n}, counting
// comparisons under the fixed charging scheme (mergesort: a + b per merge;
// quicksort: size + 1 per call on a nonempty subarray, first element as
// pivot). Throws std::invalid_argument unless the input is a permutation of
// 1..n. Always halts, and the sorted output is verified internally.
CostOutcome run_instrumented_sort(SortAlgorithm alg,
                                  const std::vector<int>& permutation);

}  // namespace edr
