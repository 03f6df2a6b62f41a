#pragma once

#include "edr/rational.hpp"

#include <cstdint>
#include <optional>

namespace edr {

// Cost of one run: a finite step count, or divergence.
struct CostOutcome {
  std::optional<std::uint64_t> steps;  // nullopt = diverged

  static CostOutcome finite(std::uint64_t n) { return CostOutcome{n}; }
  static CostOutcome diverged() { return CostOutcome{std::nullopt}; }
  bool diverges() const { return !steps.has_value(); }
};

// Discount family D(c). Two kinds:
//   exponential(lambda): D(c) = e^{-lambda c}, lambda > 0
//   rational_base(rho):  D(c) = rho^c exactly, rho in (0,1)
// Divergent cost always discounts to 0.
class DiscountSpec {
 public:
  static DiscountSpec exponential(double lambda);
  static DiscountSpec rational_base(const Rational& rho);

  bool is_rational() const { return rho_.has_value(); }
  // Decay rate; equals -ln(rho) for the rational-base kind.
  double lambda() const { return lambda_; }
  // Precondition: is_rational().
  const Rational& rho() const;

 private:
  DiscountSpec(double lambda, std::optional<Rational> rho);
  double lambda_;
  std::optional<Rational> rho_;
};

// D(cost) in [0, 1]; 0 when the run diverged.
double discount_factor(const DiscountSpec& spec, const CostOutcome& cost);
double discount_factor(const DiscountSpec& spec, std::uint64_t steps);

// log D(steps) = -lambda * steps, safe for step counts far past underflow.
double log_discount(const DiscountSpec& spec, std::uint64_t steps);

// rho^steps as an exact rational.
Rational exact_discount(const Rational& rho, std::uint64_t steps);

}  // namespace edr
