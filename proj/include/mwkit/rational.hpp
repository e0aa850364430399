#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mwkit {

// Exact rational; always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "12", "3.5", "-0.25" or "7/2" exactly. Throws Error(SyntaxError).
Rational parse_rational(std::string_view text);

/// Canonical text form: "5", "7/2", "-1/3".
std::string to_string(const Rational& value);

}  // namespace mwkit
