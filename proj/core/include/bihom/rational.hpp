#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bihom {

/// Exact arbitrary-precision rational scalar.  Always kept in canonical
/// form (reduced fraction, positive denominator), so equality is plain
/// value equality and no operation ever rounds.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

using Vec = std::vector<Rational>;

/// Canonical text form: "-3/2", "7", "0".  Denominator omitted when 1.
std::string to_fraction_string(const Rational& value);

/// Strict parser for the interchange grammar -?[0-9]+(/[1-9][0-9]*)?.
/// Anything else (floats, whitespace, zero denominators) yields nullopt.
std::optional<Rational> parse_fraction(std::string_view text);

}  // namespace bihom
