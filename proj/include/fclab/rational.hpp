#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace fclab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Parses "p/q" or "p" (arbitrary precision, q > 0 after normalization).
Rational rational_from_string(const std::string& text);

/// Formats as "p/q", or plain "p" when the denominator is 1.
std::string to_fraction_string(const Rational& r);

/// base^exp for integer exp (exp may be negative; base must be nonzero then).
Rational rational_pow(const Rational& base, long exp);

}  // namespace fclab
