#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "loghessian/rational.hpp"

namespace loghessian {

// Exponent vector of a Laurent monomial. Its length equals the ambient
// variable count of the owning polynomial; entries may be negative.
using ExponentVector = std::vector<std::int64_t>;

// Raised by parse_laurent; offset is the 0-based position in the input text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": " + message),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Sparse Laurent polynomial with exact rational coefficients, an element of
// Q[x1, x1^-1, ..., xn, xn^-1]. The term map never stores a zero coefficient
// and the zero polynomial is the empty map, so equality of term maps is
// equality of polynomials.
class LaurentPolynomial {
 public:
  using TermMap = std::map<ExponentVector, Rational>;

  // The zero polynomial in var_count variables.
  explicit LaurentPolynomial(int var_count = 0);

  static LaurentPolynomial constant(int var_count, const Rational& value);
  static LaurentPolynomial monomial(int var_count, const ExponentVector& exponents,
                                    const Rational& coefficient);
  // x_index with index in 1..var_count.
  static LaurentPolynomial variable(int var_count, int index);

  int var_count() const noexcept { return var_count_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  std::size_t term_count() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }

  // Zero when the exponent is absent.
  Rational coefficient(const ExponentVector& exponents) const;

  // Accumulates coefficient onto the exponent, erasing the term if the sum
  // cancels. The exponent length must match var_count.
  void add_term(const ExponentVector& exponents, const Rational& coefficient);

  // Exact value at a torus point: every coordinate must be nonzero and the
  // point length must equal var_count.
  Rational evaluate(const std::vector<Rational>& point) const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  int var_count_;
  TermMap terms_;
};

LaurentPolynomial operator-(const LaurentPolynomial& f);
LaurentPolynomial operator+(const LaurentPolynomial& f, const LaurentPolynomial& g);
LaurentPolynomial operator-(const LaurentPolynomial& f, const LaurentPolynomial& g);
LaurentPolynomial operator*(const LaurentPolynomial& f, const LaurentPolynomial& g);
LaurentPolynomial operator*(const Rational& c, const LaurentPolynomial& f);

// Parses the grammar
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := 'x' INDEX ('^' SIGNED_INT)?
//   coeff  := SIGNED_INT ('/' POSITIVE_INT)?
// with whitespace ignored and INDEX 1-based. Throws ParseError with the
// offending offset; variable indexes outside 1..var_count are rejected.
LaurentPolynomial parse_laurent(std::string_view text, int var_count);

// Deterministic printing: terms in descending lexicographic exponent order,
// unit coefficients and unit exponents omitted, the zero polynomial as "0".
// parse_laurent(format_canonical(f), f.var_count()) == f.
std::string format_canonical(const LaurentPolynomial& f);

}  // namespace loghessian
