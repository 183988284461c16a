#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace dgr {

// Exact ratio carrier for average distances, remoteness and bound values.
// boost::rational keeps values in lowest terms with a positive denominator.
using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);
double to_double(const Rational& r);

std::int64_t floor(const Rational& r);
std::int64_t ceil(const Rational& r);

// Accepts "p/q", "p" or a terminating decimal such as "2.5".
Rational parse_rational(std::string_view text);

// "5/2 (= 2.5)"
std::string fraction_and_decimal(const Rational& r);

}  // namespace dgr
