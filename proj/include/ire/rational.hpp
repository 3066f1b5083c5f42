#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ire {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Parses "p", "-p/q" or "p/q"; throws ParseError on malformed input.
Rat parse_rational(const std::string& text);

/// Formats as "p" for integers, "p/q" otherwise (q > 0, reduced).
std::string format_rational(const Rat& r);

}  // namespace ire
