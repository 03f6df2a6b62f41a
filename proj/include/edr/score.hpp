#pragma once

#include "edr/discount.hpp"
#include "edr/numeric.hpp"
#include "edr/rational.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>

namespace edr {

enum class ScoreRepr { LogFloat, ExactRational };

// A certified score interval [lo, hi] within [0, 1]. Zero-width intervals
// represent exactly known scores. The exact-rational representation carries
// the endpoints losslessly for comparisons that must not suffer float
// boundary ambiguity.
class ScoreValue {
 public:
  static ScoreValue interval(double lo, double hi);
  static ScoreValue point(double v) { return interval(v, v); }
  static ScoreValue exact(const Rational& v) { return exact_interval(v, v); }
  static ScoreValue exact_interval(const Rational& lo, const Rational& hi);

  ScoreRepr repr() const { return repr_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double width() const { return hi_ - lo_; }
  // Preconditions: repr() == ScoreRepr::ExactRational.
  const Rational& exact_lo() const;
  const Rational& exact_hi() const;

 private:
  ScoreValue() = default;
  double lo_ = 0.0;
  double hi_ = 1.0;
  ScoreRepr repr_ = ScoreRepr::LogFloat;
  std::optional<std::pair<Rational, Rational>> exact_;
};

enum class Comparison { ABetter, BBetter, Indeterminate };

// A is better iff its interval lies strictly above B's, and vice versa;
// overlapping intervals are indeterminate. Exact endpoints are compared
// rationally when both sides have them.
Comparison compare_scores(const ScoreValue& a, const ScoreValue& b);

template <typename Input>
using RewardFunction = std::function<double(const Input&)>;

// Expected discounted reward over an explicitly enumerated finite input
// space: sum of P({w}) * r(w) * D(cost(w)). Float mode; the per-term products
// are accumulated in the log domain. Divergent runs contribute 0.
//
// Throws std::invalid_argument if the two maps do not share an identical key
// set, if probabilities are negative or do not sum to 1 within 1e-12, or if
// a reward value leaves [0, 1].
template <typename Input>
ScoreValue score_exact_finite(const std::map<Input, CostOutcome>& costs,
                              const std::map<Input, double>& probs,
                              const DiscountSpec& spec,
                              const RewardFunction<Input>& reward = nullptr) {
  if (costs.size() != probs.size()) {
    throw std::invalid_argument("score_exact_finite: key sets differ");
  }
  double prob_sum = 0.0;
  LogSumExpAccumulator acc;
  auto ci = costs.begin();
  auto pi = probs.begin();
  for (; ci != costs.end(); ++ci, ++pi) {
    if (ci->first != pi->first) {
      throw std::invalid_argument("score_exact_finite: key sets differ");
    }
    const double p = pi->second;
    if (p < 0.0) {
      throw std::invalid_argument("score_exact_finite: negative probability");
    }
    prob_sum += p;
    const double r = reward ? reward(ci->first) : 1.0;
    if (r < 0.0 || r > 1.0) {
      throw std::invalid_argument("score_exact_finite: reward outside [0,1]");
    }
    if (ci->second.diverges() || p == 0.0 || r == 0.0) continue;
    acc.add(std::log(p) + std::log(r) + log_discount(spec, *ci->second.steps));
  }
  if (std::abs(prob_sum - 1.0) > 1e-12) {
    throw std::invalid_argument(
        "score_exact_finite: probabilities must sum to 1 within 1e-12");
  }
  const double v = std::exp(acc.value());
  return ScoreValue::point(v > 1.0 ? 1.0 : v);
}

// Exact-rational counterpart (reward fixed at 1): sum of p(w) * rho^steps(w).
// Probabilities must be nonnegative and sum to exactly 1.
template <typename Input>
Rational exact_score_sum(const std::map<Input, CostOutcome>& costs,
                         const std::map<Input, Rational>& probs,
                         const Rational& rho) {
  if (costs.size() != probs.size()) {
    throw std::invalid_argument("exact_score_sum: key sets differ");
  }
  Rational prob_sum = 0;
  Rational acc = 0;
  auto ci = costs.begin();
  auto pi = probs.begin();
  for (; ci != costs.end(); ++ci, ++pi) {
    if (ci->first != pi->first) {
      throw std::invalid_argument("exact_score_sum: key sets differ");
    }
    if (pi->second < 0) {
      throw std::invalid_argument("exact_score_sum: negative probability");
    }
    prob_sum += pi->second;
    if (ci->second.diverges()) continue;
    acc += pi->second * exact_discount(rho, *ci->second.steps);
  }
  if (prob_sum != 1) {
    throw std::invalid_argument(
        "exact_score_sum: probabilities must sum to exactly 1");
  }
  return acc;
}

template <typename Input>
ScoreValue score_exact_finite_rational(const std::map<Input, CostOutcome>& costs,
                                       const std::map<Input, Rational>& probs,
                                       const Rational& rho) {
  return ScoreValue::exact(exact_score_sum(costs, probs, rho));
}

// Distribution over input lengths; inputs of a given length are uniform
// within that length (the samplers in the estimator honor this).
class InputModel {
 public:
  static InputModel point_mass(int n);
  // pmf(n) = p * (1-p)^n on n >= 0; certified tail T(N) = (1-p)^{N+1}.
  static InputModel geometric(double p);
  static InputModel finite(const std::map<int, double>& pmf);

  double length_prob(int n) const;
  // Certified tail bound T(N) >= sum_{n > N} pmf(n); nonincreasing in N.
  double tail_bound(int cutoff) const;
  // Largest length with positive probability, if the support is bounded.
  std::optional<int> support_bound() const;

 private:
  enum class Kind { PointMass, Geometric, Finite };
  Kind kind_ = Kind::PointMass;
  int point_ = 0;
  double geo_p_ = 0.5;
  std::map<int, double> pmf_;
};

// Combines per-length scores s_n into an interval for the overall score:
// lo = sum_{n <= cutoff} pmf(n) * s_n, hi = min(1, lo + tail_bound(cutoff)).
// Throws if a supported length <= cutoff is missing from per_length_scores
// or if any s_n leaves [0, 1].
ScoreValue aggregate_by_length(const std::map<int, double>& per_length_scores,
                               const InputModel& model, int cutoff);

}  // namespace edr
