#include "dgr/rational.hpp"

#include <charconv>
#include <cstdio>
#include <string>

#include "dgr/errors.hpp"

namespace dgr {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::int64_t floor(const Rational& r) {
  const auto q = r.numerator() / r.denominator();
  return (r.numerator() % r.denominator() != 0 && r.numerator() < 0) ? q - 1 : q;
}

std::int64_t ceil(const Rational& r) {
  const auto q = r.numerator() / r.denominator();
  return (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ? q + 1 : q;
}

namespace {

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw InvalidInput("not a rational number: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = parse_integer(text.substr(0, slash), text);
    const auto den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw InvalidInput("zero denominator: '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto frac = text.substr(dot + 1);
    if (frac.size() > 15) throw InvalidInput("too many decimals: '" + std::string(text) + "'");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const bool negative = !text.empty() && text.front() == '-';
    const auto whole = dot == 0 || text.substr(0, dot) == "-" ? 0 : parse_integer(text.substr(0, dot), text);
    const auto part = frac.empty() ? 0 : parse_integer(frac, text);
    if (part < 0) throw InvalidInput("not a rational number: '" + std::string(text) + "'");
    const auto magnitude = (whole < 0 ? -whole : whole) * scale + part;
    return Rational(negative ? -magnitude : magnitude, scale);
  }
  return Rational(parse_integer(text, text));
}

std::string fraction_and_decimal(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", to_double(r));
  return to_string(r) + " (= " + buf + ")";
}

}  // namespace dgr
