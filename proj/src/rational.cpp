#include "edr/rational.hpp"

#include <stdexcept>

namespace edr {

std::string to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

std::optional<Rational> parse_fraction(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto slash = text.find('/');
  const std::string num_part = text.substr(0, slash);
  const std::string den_part =
      slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (num_part.empty() || den_part.empty()) return std::nullopt;
  auto is_integer = [](const std::string& s) {
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  if (!is_integer(num_part) || !is_integer(den_part)) return std::nullopt;
  BigInt num(num_part);
  BigInt den(den_part);
  if (den == 0) return std::nullopt;
  return Rational(num, den);
}

Rational rational_pow(const Rational& r, std::uint64_t n) {
  if (n > static_cast<std::uint64_t>(std::numeric_limits<unsigned>::max())) {
    throw std::invalid_argument("rational_pow: exponent too large");
  }
  const auto e = static_cast<unsigned>(n);
  return Rational(pow(numerator(r), e), pow(denominator(r), e));
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace edr
