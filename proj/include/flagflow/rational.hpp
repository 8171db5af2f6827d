#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace flagflow {

// Exact arithmetic backbone. cpp_rational keeps the canonical reduced form
// with a positive denominator, which the rest of the library relies on.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) { return Rational(num, den); }

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

// "3", "-5/12"
std::string to_string(const Rational& r);

// Accepts the same forms to_string produces. Throws std::invalid_argument.
Rational rational_from_string(const std::string& s);

}  // namespace flagflow
