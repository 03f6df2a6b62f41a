#include "edr/estimator.hpp"

#include "edr/sorting.hpp"

#include <cmath>
#include <stdexcept>

namespace edr {
namespace {

constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

double clip01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

}  // namespace

std::uint64_t SplitMix64::next() {
  ++draws_;
  state_ += kGoldenGamma;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::bounded(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("SplitMix64::bounded: n must be >= 1");
  const std::uint64_t rem = (std::uint64_t{0} - n) % n;  // 2^64 mod n
  for (;;) {
    const std::uint64_t x = next();
    if (x >= rem) return (x - rem) % n;
  }
}

double SplitMix64::uniform01() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

SplitMix64 substream(std::uint64_t seed, std::uint64_t chunk_index) {
  return SplitMix64(seed + kChunkStride * chunk_index * kGoldenGamma);
}

std::pair<double, double> Estimate::bias_interval() const {
  return {point, point + bias_bound};
}

std::pair<double, double> Estimate::confidence_interval() const {
  return {clip01(point - ci_half_width),
          clip01(point + ci_half_width + bias_bound)};
}

std::optional<std::uint64_t> MergesortAlgorithm::run_within(
    const std::vector<int>& input, std::uint64_t budget) const {
  const CostOutcome c = run_instrumented_sort(SortAlgorithm::Mergesort, input);
  return *c.steps <= budget ? c.steps : std::nullopt;
}

std::optional<std::uint64_t> QuicksortAlgorithm::run_within(
    const std::vector<int>& input, std::uint64_t budget) const {
  const CostOutcome c = run_instrumented_sort(SortAlgorithm::Quicksort, input);
  return *c.steps <= budget ? c.steps : std::nullopt;
}

std::optional<std::uint64_t> NeverHaltingAlgorithm::run_within(
    const std::vector<int>&, std::uint64_t) const {
  return std::nullopt;
}

std::vector<int> draw_input(const InputModel& model, SplitMix64& rng) {
  // Inverse-CDF walk over the length pmf.
  double u = rng.uniform01();
  int n = 0;
  for (;;) {
    const double p = model.length_prob(n);
    if (u < p) break;
    u -= p;
    if (const auto bound = model.support_bound(); bound && n >= *bound) break;
    if (p > 0.0 && p < 1e-300) break;  // vanishing tail; clamp
    ++n;
  }
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(i) + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

InputSampler permutation_sampler(const InputModel& model) {
  return [model](SplitMix64& rng) { return draw_input(model, rng); };
}

InputSampler value_sampler(int modulus) {
  if (modulus < 1) throw std::invalid_argument("value_sampler: modulus >= 1");
  return [modulus](SplitMix64& rng) {
    return std::vector<int>{
        static_cast<int>(rng.bounded(static_cast<std::uint64_t>(modulus)))};
  };
}

Estimate monte_carlo_score(const InstrumentedAlgorithm& alg,
                           const InputSampler& draw, const DiscountSpec& spec,
                           const EstimatorConfig& cfg,
                           const RewardFunction<std::vector<int>>& reward) {
  if (cfg.samples == 0) {
    throw std::invalid_argument("monte_carlo_score: samples must be >= 1");
  }
  if (cfg.budget == 0) {
    throw std::invalid_argument("monte_carlo_score: budget must be >= 1");
  }
  if (!(cfg.delta > 0.0 && cfg.delta < 1.0)) {
    throw std::invalid_argument("monte_carlo_score: delta must lie in (0,1)");
  }
  const std::uint64_t chunks =
      (cfg.samples + kChunkSamples - 1) / kChunkSamples;
  double total = 0.0;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    SplitMix64 rng = substream(cfg.seed, c);
    const std::uint64_t begin = c * kChunkSamples;
    const std::uint64_t end = std::min(cfg.samples, begin + kChunkSamples);
    double chunk_sum = 0.0;
    for (std::uint64_t i = begin; i < end; ++i) {
      const std::vector<int> input = draw(rng);
      const double r = reward ? reward(input) : 1.0;
      if (r < 0.0 || r > 1.0) {
        throw std::invalid_argument("monte_carlo_score: reward outside [0,1]");
      }
      const auto steps = alg.run_within(input, cfg.budget);
      if (steps) chunk_sum += r * discount_factor(spec, *steps);
    }
    if (rng.draws() >= kChunkStride) {
      throw std::runtime_error(
          "monte_carlo_score: chunk exceeded its substream reservation");
    }
    total += chunk_sum;
  }
  Estimate est;
  est.point = total / static_cast<double>(cfg.samples);
  est.ci_half_width = std::sqrt(std::log(2.0 / cfg.delta) /
                                (2.0 * static_cast<double>(cfg.samples)));
  est.bias_bound = discount_factor(spec, cfg.budget);
  est.achieved_samples = cfg.samples;
  return est;
}

}  // namespace edr
