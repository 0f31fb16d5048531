#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace npoint {

/// Arbitrary-precision integer and rational types. Every coefficient in the
/// exact pipelines is a Rational; floating point never enters them.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical text form: "num/den" with den > 0, or just "num" when den == 1.
std::string rational_to_string(const Rational& r);

/// Inverse of rational_to_string. Throws std::invalid_argument on bad input.
Rational parse_rational(const std::string& s);

double rational_to_double(const Rational& r);

Int factorial(int n);

/// Odd double factorial m!! = m(m-2)...1 for odd m >= -1, with (-1)!! = 1.
Int odd_double_factorial(long m);

}  // namespace npoint
