#pragma once

#include "edr/discount.hpp"
#include "edr/score.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace edr {

// SplitMix64 (Steele/Lea/Flood constants). Chosen over std engines because
// the byte streams must be identical across standard libraries; every
// distribution used here is implemented on top of next().
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Unbiased uniform draw from [0, n), n >= 1 (rejection below the largest
  // multiple of n).
  std::uint64_t bounded(std::uint64_t n);
  // Uniform in [0, 1) with 53 random bits.
  double uniform01();
  std::uint64_t draws() const { return draws_; }

 private:
  std::uint64_t state_;
  std::uint64_t draws_ = 0;
};

// Substreams advance the SplitMix64 state by a fixed jump of
// kChunkStride * chunk_index draws, so chunks never overlap regardless of
// how they are scheduled. (A SplitMix64 state after k draws is
// seed + k * golden-gamma, which makes the jump O(1).)
inline constexpr std::uint64_t kChunkStride = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kChunkSamples = 4096;
SplitMix64 substream(std::uint64_t seed, std::uint64_t chunk_index);

struct EstimatorConfig {
  std::uint64_t samples = 10000;       // N
  std::uint64_t budget = 1u << 20;     // per-run step budget B
  std::uint64_t seed = 0;
  double delta = 0.01;                 // CI failure probability
};

struct Estimate {
  double point = 0.0;
  double ci_half_width = 0.0;  // sqrt(ln(2/delta) / (2N))
  double bias_bound = 0.0;     // D(B): one-sided truncation bias
  std::uint64_t achieved_samples = 0;

  // Deterministic truncation certificate: the estimator's expectation lies
  // in [point, point + bias_bound] up to sampling error; width is exactly
  // bias_bound.
  std::pair<double, double> bias_interval() const;
  // Adds the Hoeffding half-width on both sides (clipped to [0, 1]); with
  // probability >= 1 - delta the true score lies inside.
  std::pair<double, double> confidence_interval() const;
};

// An algorithm that can be run with a step budget. run_within returns the
// step count when the run halts within `budget` steps, and nullopt when it
// was cut off (the sample then scores 0).
class InstrumentedAlgorithm {
 public:
  virtual ~InstrumentedAlgorithm() = default;
  virtual std::optional<std::uint64_t> run_within(
      const std::vector<int>& input, std::uint64_t budget) const = 0;
};

class MergesortAlgorithm final : public InstrumentedAlgorithm {
 public:
  std::optional<std::uint64_t> run_within(const std::vector<int>& input,
                                          std::uint64_t budget) const override;
};

class QuicksortAlgorithm final : public InstrumentedAlgorithm {
 public:
  std::optional<std::uint64_t> run_within(const std::vector<int>& input,
                                          std::uint64_t budget) const override;
};

// Exceeds every budget on every input; used to pin down truncation behavior.
class NeverHaltingAlgorithm final : public InstrumentedAlgorithm {
 public:
  std::optional<std::uint64_t> run_within(const std::vector<int>& input,
                                          std::uint64_t budget) const override;
};

// Draws a length from the model, then a uniform permutation of 1..n.
std::vector<int> draw_input(const InputModel& model, SplitMix64& rng);

using InputSampler = std::function<std::vector<int>(SplitMix64&)>;
// Permutation inputs distributed per the length model.
InputSampler permutation_sampler(const InputModel& model);
// Single-value inputs uniform over {0, ..., modulus-1} (microcosm inputs).
InputSampler value_sampler(int modulus);

// Chunked Monte Carlo estimator: sample i belongs to chunk i / kChunkSamples,
// each chunk draws from its own substream, and chunk sums are merged in
// chunk order, so the result depends only on (config, algorithm, model) and
// not on scheduling. Samples scoring r * D(steps) when the run halts within
// the budget and 0 otherwise.
Estimate monte_carlo_score(
    const InstrumentedAlgorithm& alg, const InputSampler& draw,
    const DiscountSpec& spec, const EstimatorConfig& cfg,
    const RewardFunction<std::vector<int>>& reward = nullptr);

}  // namespace edr
