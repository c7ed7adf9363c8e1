#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace zfp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Parses an optionally signed decimal integer; throws ParseError.
BigInt parse_bigint(const std::string& text);

/// Parses "p", "p/q" or a finite decimal such as "-0.25" into an exact rational; throws ParseError.
Rational parse_rational(const std::string& text);

/// "p" when the denominator is 1, otherwise "p/q" in lowest terms.
std::string to_string(const Rational& r);

}  // namespace zfp
