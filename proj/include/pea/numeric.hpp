#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pea {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms, "p" when q == 1. Never a decimal.
std::string to_string(const Rational& r);

/// Parses "p", "-p" or "p/q". Throws InputError on anything else.
Rational parse_rational(const std::string& text);

}  // namespace pea
