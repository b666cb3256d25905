#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace loghessian {

// Exact scalars. Integer is an arbitrary-precision signed integer; Rational
// is kept normalized at all times: positive denominator, gcd(|num|, den) = 1,
// zero stored as 0/1.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Builds numerator/denominator with the sign moved into the numerator.
// Throws std::invalid_argument on a zero denominator.
Rational make_rational(Integer numerator, Integer denominator);

// "p" when the denominator is 1, "p/q" otherwise.
std::string format_rational(const Rational& value);

// base^e for a possibly negative exponent. base must be nonzero when e < 0.
Rational rational_pow(const Rational& base, std::int64_t e);

// Narrowing conversion with an explicit range check; context names the caller
// in the error message.
std::int64_t checked_int64(const Integer& value, const char* context);

}  // namespace loghessian
