#include "edr/sorting.hpp"

#include "edr/numeric.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace edr {
namespace {

// ceil(lg n) for n >= 1.
std::uint64_t ceil_lg(std::uint64_t n) {
  return n <= 1 ? 0 : std::bit_width(n - 1);
}

std::uint64_t mergesort_rec(std::vector<int>& v, std::vector<int>& buf,
                            std::size_t lo, std::size_t hi) {
  const std::size_t n = hi - lo;
  if (n <= 1) return 0;
  const std::size_t mid = lo + n / 2;
  std::uint64_t cost = mergesort_rec(v, buf, lo, mid) +
                       mergesort_rec(v, buf, mid, hi);
  // The charging scheme bills a + b for every merge, independent of how the
  // runs interleave, so the count is added up front.
  cost += n;
  std::merge(v.begin() + lo, v.begin() + mid, v.begin() + mid, v.begin() + hi,
             buf.begin() + lo);
  std::copy(buf.begin() + lo, buf.begin() + hi, v.begin() + lo);
  return cost;
}

std::uint64_t quicksort_rec(std::vector<int>& v) {
  if (v.empty()) return 0;
  std::uint64_t cost = v.size() + 1;
  const int pivot = v[0];
  std::vector<int> less, greater;
  less.reserve(v.size());
  greater.reserve(v.size());
  for (std::size_t i = 1; i < v.size(); ++i) {
    (v[i] < pivot ? less : greater).push_back(v[i]);
  }
  cost += quicksort_rec(less) + quicksort_rec(greater);
  std::size_t k = 0;
  for (int x : less) v[k++] = x;
  v[k++] = pivot;
  for (int x : greater) v[k++] = x;
  return cost;
}

void require_permutation(const std::vector<int>& input) {
  std::vector<int> sorted = input;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1) {
      throw std::invalid_argument(
          "run_instrumented_sort: input is not a permutation of 1..n");
    }
  }
}

}  // namespace

std::uint64_t mergesort_cost(std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t c = ceil_lg(n);
  return n * c + n - (std::uint64_t{1} << c);
}

std::uint64_t mergesort_cost_sum_form(std::uint64_t n) {
  std::uint64_t acc = 0;
  for (std::uint64_t k = 1; k + 1 <= n; ++k) {
    acc += (std::bit_width(k) - 1) + 2;  // floor(lg k) + 2
  }
  return acc;
}

double mergesort_log_score(std::uint64_t n, const DiscountSpec& spec) {
  return log_discount(spec, mergesort_cost(n));
}

double mergesort_score(std::uint64_t n, const DiscountSpec& spec) {
  return discount_factor(spec, mergesort_cost(n));
}

ScoreTable::ScoreTable(SortAlgorithm alg, std::vector<double> log_values)
    : alg_(alg), log_values_(std::move(log_values)) {
  if (log_values_.empty()) {
    throw std::invalid_argument("ScoreTable: empty table");
  }
}

double ScoreTable::log_at(std::size_t n) const {
  if (n >= log_values_.size()) {
    throw std::out_of_range("ScoreTable: index past max_n");
  }
  return log_values_[n];
}

double ScoreTable::at(std::size_t n) const { return std::exp(log_at(n)); }

ScoreTable mergesort_score_table(std::size_t n_max, const DiscountSpec& spec) {
  std::vector<double> lv(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    lv[n] = mergesort_log_score(n, spec);
  }
  return ScoreTable(SortAlgorithm::Mergesort, std::move(lv));
}

ScoreTable quicksort_score_table(std::size_t n_max, const DiscountSpec& spec) {
  const double lambda = spec.lambda();
  std::vector<double> lq(n_max + 1);
  lq[0] = 0.0;  // q_0 = 1
  for (std::size_t n = 1; n <= n_max; ++n) {
    LogSumExpAccumulator acc;
    for (std::size_t k = 1; k <= n; ++k) {
      acc.add(lq[k - 1] + lq[n - k]);
    }
    lq[n] = -lambda * static_cast<double>(n + 1) -
            std::log(static_cast<double>(n)) + acc.value();
  }
  return ScoreTable(SortAlgorithm::Quicksort, std::move(lq));
}

double quicksort_score_bruteforce(std::size_t n, const DiscountSpec& spec) {
  if (n > 9) {
    throw std::invalid_argument("quicksort_score_bruteforce: n must be <= 9");
  }
  if (n == 0) return 1.0;
  std::vector<int> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i) + 1;
  double sum = 0.0;
  std::uint64_t count = 0;
  do {
    const CostOutcome c = run_instrumented_sort(SortAlgorithm::Quicksort, perm);
    sum += discount_factor(spec, c);
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum / static_cast<double>(count);
}

double quicksort_avg_cost(std::uint64_t n) {
  return 2.0 * static_cast<double>(n + 1) * (harmonic_number(n + 1) - 1.0);
}

double ScoreBounds::lower() const { return std::exp(log_lower); }
double ScoreBounds::upper() const { return std::exp(log_upper); }

ScoreBounds mergesort_score_bounds(std::uint64_t n, const DiscountSpec& spec) {
  if (n < 1) {
    throw std::invalid_argument("mergesort_score_bounds: n must be >= 1");
  }
  const double lambda = spec.lambda();
  const double base = -(lambda / kLn2) * log_factorial(n - 1);
  const double nm1 = static_cast<double>(n - 1);
  return ScoreBounds{-2.0 * lambda * nm1 + base, -lambda * nm1 + base};
}

ScoreBounds quicksort_score_bounds(std::uint64_t n, const DiscountSpec& spec) {
  const double lambda = spec.lambda();
  if (lambda > kLn2 * (1.0 + 1e-12)) {
    throw std::invalid_argument(
        "quicksort_score_bounds: requires lambda <= ln 2");
  }
  const double np1 = static_cast<double>(n + 1);
  const double log_lower = -2.0 * kEulerGamma * lambda * np1 - lambda +
                           lambda * std::log(2.0 * M_PI * np1) -
                           2.0 * lambda * log_factorial(n + 1);
  const double log_upper = -2.0 * lambda * static_cast<double>(n) -
                           (lambda / kLn2) * log_factorial(n);
  return ScoreBounds{log_lower, log_upper};
}

CostOutcome run_instrumented_sort(SortAlgorithm alg,
                                  const std::vector<int>& permutation) {
  require_permutation(permutation);
  std::vector<int> v = permutation;
  std::uint64_t cost = 0;
  if (alg == SortAlgorithm::Mergesort) {
    std::vector<int> buf(v.size());
    cost = mergesort_rec(v, buf, 0, v.size());
  } else {
    cost = quicksort_rec(v);
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != static_cast<int>(i) + 1) {
      throw std::logic_error("run_instrumented_sort: output not sorted");
    }
  }
  return CostOutcome::finite(cost);
}

}  // namespace edr
