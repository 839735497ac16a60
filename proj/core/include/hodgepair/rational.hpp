#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "hodgepair/error.hpp"

namespace hodgepair {

/// Exact scalar type for all linear algebra in this library.
/// boost::multiprecision::cpp_rational keeps every value in lowest terms with
/// a positive denominator, so equality is plain value equality and no
/// overflow or rounding can occur anywhere in the pipeline.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parse "p" or "p/q" (optionally signed). Throws Error on malformed input
/// or a zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string format_rational(const Rational& value);

/// Lossy conversion used only by the floating-point cross-check backend.
double to_double(const Rational& value);

}  // namespace hodgepair
