#include "edr/discount.hpp"

#include <cmath>
#include <stdexcept>

namespace edr {
namespace {

// Past this many steps the exact-power route has no double precision left;
// both kinds fall back to exp() on the log value.
constexpr std::uint64_t kExactPowStepLimit = 4096;

}  // namespace

DiscountSpec::DiscountSpec(double lambda, std::optional<Rational> rho)
    : lambda_(lambda), rho_(std::move(rho)) {}

DiscountSpec DiscountSpec::exponential(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("DiscountSpec: lambda must be finite and > 0");
  }
  return DiscountSpec(lambda, std::nullopt);
}

DiscountSpec DiscountSpec::rational_base(const Rational& rho) {
  if (!(rho > 0 && rho < 1)) {
    throw std::invalid_argument("DiscountSpec: rho must lie in (0,1)");
  }
  const double lambda = -std::log(to_double(rho));
  return DiscountSpec(lambda, rho);
}

const Rational& DiscountSpec::rho() const {
  if (!rho_) throw std::logic_error("DiscountSpec: rho() on exponential kind");
  return *rho_;
}

double discount_factor(const DiscountSpec& spec, const CostOutcome& cost) {
  if (cost.diverges()) return 0.0;
  return discount_factor(spec, *cost.steps);
}

double discount_factor(const DiscountSpec& spec, std::uint64_t steps) {
  if (spec.is_rational() && steps <= kExactPowStepLimit) {
    return to_double(exact_discount(spec.rho(), steps));
  }
  return std::exp(log_discount(spec, steps));
}

double log_discount(const DiscountSpec& spec, std::uint64_t steps) {
  return -spec.lambda() * static_cast<double>(steps);
}

Rational exact_discount(const Rational& rho, std::uint64_t steps) {
  if (!(rho > 0 && rho < 1)) {
    throw std::invalid_argument("exact_discount: rho must lie in (0,1)");
  }
  return rational_pow(rho, steps);
}

}  // namespace edr
