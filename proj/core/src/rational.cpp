#include "loghessian/rational.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

namespace loghessian {

Rational make_rational(Integer numerator, Integer denominator) {
  if (denominator == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  return Rational(numerator, denominator);
}

std::string format_rational(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

Rational rational_pow(const Rational& base, std::int64_t e) {
  if (e == 0) {
    return Rational(1);
  }
  if (base == 0) {
    if (e < 0) {
      throw std::domain_error("zero base raised to a negative power");
    }
    return Rational(0);
  }
  std::uint64_t magnitude =
      e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  if (magnitude > std::numeric_limits<unsigned>::max()) {
    throw std::overflow_error("exponent magnitude too large");
  }
  Integer num = numerator(base);
  Integer den = denominator(base);
  if (e < 0) {
    std::swap(num, den);
    if (den < 0) {
      num = -num;
      den = -den;
    }
  }
  using boost::multiprecision::pow;
  const auto m = static_cast<unsigned>(magnitude);
  return Rational(pow(num, m), pow(den, m));
}

std::int64_t checked_int64(const Integer& value, const char* context) {
  static const Integer kMin = std::numeric_limits<std::int64_t>::min();
  static const Integer kMax = std::numeric_limits<std::int64_t>::max();
  if (value < kMin || value > kMax) {
    throw std::overflow_error(std::string(context) + ": integer out of 64-bit range");
  }
  return value.convert_to<std::int64_t>();
}

}  // namespace loghessian
