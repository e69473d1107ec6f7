#include "paraflow/rational.hpp"

#include <algorithm>
#include <cctype>

namespace paraflow {

std::string to_string(const Rational& value) {
  const BigInt num = numerator(value);
  const BigInt den = denominator(value);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::optional<BigInt> parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    return std::nullopt;
  }
  BigInt value{std::string(s)};
  return negative ? BigInt(-value) : value;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    const auto num = parse_integer(text);
    if (!num) {
      return std::nullopt;
    }
    return Rational(*num);
  }
  const auto num = parse_integer(text.substr(0, slash));
  const auto den_text = text.substr(slash + 1);
  if (!num || !all_digits(den_text)) {
    return std::nullopt;
  }
  BigInt den((std::string(den_text)));
  if (den == 0) {
    return std::nullopt;
  }
  return Rational(*num, den);
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace paraflow
