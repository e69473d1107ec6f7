#ifndef PARAFLOW_RATIONAL_HPP
#define PARAFLOW_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace paraflow {

// All flow quantities are exact rationals. Breakpoints such as 1/4 or 3/5
// must compare exactly; floating point appears only in CSV rendering.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

// Accepts "p" or "p/q" with an optional leading minus sign; q must be a
// positive integer. Returns nullopt on any other input.
std::optional<Rational> parse_rational(std::string_view text);

double to_double(const Rational& value);

}  // namespace paraflow

#endif
