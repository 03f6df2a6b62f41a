#include "edr/score.hpp"

#include <cmath>

namespace edr {

ScoreValue ScoreValue::interval(double lo, double hi) {
  if (!(lo >= 0.0) || !(hi <= 1.0) || !(lo <= hi)) {
    throw std::invalid_argument("ScoreValue: need 0 <= lo <= hi <= 1");
  }
  ScoreValue s;
  s.lo_ = lo;
  s.hi_ = hi;
  s.repr_ = ScoreRepr::LogFloat;
  return s;
}

ScoreValue ScoreValue::exact_interval(const Rational& lo, const Rational& hi) {
  if (!(lo >= 0 && hi <= 1 && lo <= hi)) {
    throw std::invalid_argument("ScoreValue: need 0 <= lo <= hi <= 1");
  }
  ScoreValue s;
  s.lo_ = to_double(lo);
  s.hi_ = to_double(hi);
  s.repr_ = ScoreRepr::ExactRational;
  s.exact_ = std::make_pair(lo, hi);
  return s;
}

const Rational& ScoreValue::exact_lo() const {
  if (!exact_) throw std::logic_error("ScoreValue: no exact endpoints");
  return exact_->first;
}

const Rational& ScoreValue::exact_hi() const {
  if (!exact_) throw std::logic_error("ScoreValue: no exact endpoints");
  return exact_->second;
}

Comparison compare_scores(const ScoreValue& a, const ScoreValue& b) {
  if (a.repr() == ScoreRepr::ExactRational &&
      b.repr() == ScoreRepr::ExactRational) {
    if (a.exact_lo() > b.exact_hi()) return Comparison::ABetter;
    if (b.exact_lo() > a.exact_hi()) return Comparison::BBetter;
    return Comparison::Indeterminate;
  }
  if (a.lo() > b.hi()) return Comparison::ABetter;
  if (b.lo() > a.hi()) return Comparison::BBetter;
  return Comparison::Indeterminate;
}

InputModel InputModel::point_mass(int n) {
  if (n < 0) throw std::invalid_argument("InputModel: negative length");
  InputModel m;
  m.kind_ = Kind::PointMass;
  m.point_ = n;
  return m;
}

InputModel InputModel::geometric(double p) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw std::invalid_argument("InputModel: geometric needs p in (0,1]");
  }
  InputModel m;
  m.kind_ = Kind::Geometric;
  m.geo_p_ = p;
  return m;
}

InputModel InputModel::finite(const std::map<int, double>& pmf) {
  double sum = 0.0;
  for (const auto& [n, p] : pmf) {
    if (n < 0) throw std::invalid_argument("InputModel: negative length");
    if (p < 0.0) throw std::invalid_argument("InputModel: negative probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("InputModel: pmf must sum to 1 within 1e-12");
  }
  InputModel m;
  m.kind_ = Kind::Finite;
  m.pmf_ = pmf;
  return m;
}

double InputModel::length_prob(int n) const {
  if (n < 0) return 0.0;
  switch (kind_) {
    case Kind::PointMass:
      return n == point_ ? 1.0 : 0.0;
    case Kind::Geometric:
      return geo_p_ * std::pow(1.0 - geo_p_, n);
    case Kind::Finite: {
      auto it = pmf_.find(n);
      return it == pmf_.end() ? 0.0 : it->second;
    }
  }
  return 0.0;
}

double InputModel::tail_bound(int cutoff) const {
  switch (kind_) {
    case Kind::PointMass:
      return cutoff >= point_ ? 0.0 : 1.0;
    case Kind::Geometric:
      if (cutoff < 0) return 1.0;
      return std::pow(1.0 - geo_p_, cutoff + 1);
    case Kind::Finite: {
      double tail = 0.0;
      for (auto it = pmf_.upper_bound(cutoff); it != pmf_.end(); ++it) {
        tail += it->second;
      }
      return tail;
    }
  }
  return 0.0;
}

std::optional<int> InputModel::support_bound() const {
  switch (kind_) {
    case Kind::PointMass:
      return point_;
    case Kind::Geometric:
      return std::nullopt;
    case Kind::Finite:
      return pmf_.empty() ? 0 : pmf_.rbegin()->first;
  }
  return std::nullopt;
}

ScoreValue aggregate_by_length(const std::map<int, double>& per_length_scores,
                               const InputModel& model, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("aggregate_by_length: cutoff < 0");
  double lo = 0.0;
  for (int n = 0; n <= cutoff; ++n) {
    const double p = model.length_prob(n);
    if (p == 0.0) continue;
    auto it = per_length_scores.find(n);
    if (it == per_length_scores.end()) {
      throw std::invalid_argument(
          "aggregate_by_length: missing score for supported length " +
          std::to_string(n));
    }
    const double s = it->second;
    if (s < 0.0 || s > 1.0) {
      throw std::invalid_argument("aggregate_by_length: score outside [0,1]");
    }
    lo += p * s;
  }
  if (lo > 1.0) lo = 1.0;
  double hi = lo + model.tail_bound(cutoff);
  if (hi > 1.0) hi = 1.0;
  return ScoreValue::interval(lo, hi);
}

}  // namespace edr
