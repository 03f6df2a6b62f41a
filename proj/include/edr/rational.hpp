#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace edr {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, kept in lowest terms by the backend.
using Rational = boost::multiprecision::cpp_rational;

// Canonical "p/q" form used whenever a rational crosses an output boundary.
// The denominator is always printed, so "1" renders as "1/1".
std::string to_fraction_string(const Rational& r);

// Parses "p/q" (or a bare integer "p", meaning p/1). Requires q > 0 after
// sign normalization. Returns nullopt on malformed input.
std::optional<Rational> parse_fraction(const std::string& text);

// r^n for n >= 0 (exact).
Rational rational_pow(const Rational& r, std::uint64_t n);

// Nearest double; may underflow to 0 or round for huge components.
double to_double(const Rational& r);

}  // namespace edr
