#include "loghessian/laurent.hpp"

#include <cctype>
#include <sstream>

namespace loghessian {

LaurentPolynomial::LaurentPolynomial(int var_count) : var_count_(var_count) {
  if (var_count < 0) {
    throw std::invalid_argument("negative variable count");
  }
}

LaurentPolynomial LaurentPolynomial::constant(int var_count, const Rational& value) {
  LaurentPolynomial f(var_count);
  f.add_term(ExponentVector(static_cast<std::size_t>(var_count), 0), value);
  return f;
}

LaurentPolynomial LaurentPolynomial::monomial(int var_count, const ExponentVector& exponents,
                                              const Rational& coefficient) {
  LaurentPolynomial f(var_count);
  f.add_term(exponents, coefficient);
  return f;
}

LaurentPolynomial LaurentPolynomial::variable(int var_count, int index) {
  if (index < 1 || index > var_count) {
    throw std::out_of_range("variable index out of range");
  }
  ExponentVector e(static_cast<std::size_t>(var_count), 0);
  e[static_cast<std::size_t>(index - 1)] = 1;
  return monomial(var_count, e, Rational(1));
}

bool LaurentPolynomial::is_constant() const noexcept {
  if (terms_.empty()) {
    return true;
  }
  if (terms_.size() > 1) {
    return false;
  }
  for (std::int64_t e : terms_.begin()->first) {
    if (e != 0) {
      return false;
    }
  }
  return true;
}

Rational LaurentPolynomial::coefficient(const ExponentVector& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::add_term(const ExponentVector& exponents, const Rational& coefficient) {
  if (exponents.size() != static_cast<std::size_t>(var_count_)) {
    throw std::invalid_argument("exponent vector length does not match variable count");
  }
  if (coefficient == 0) {
    return;
  }
  auto [it, inserted] = terms_.emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

Rational LaurentPolynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != static_cast<std::size_t>(var_count_)) {
    throw std::invalid_argument("point length does not match variable count");
  }
  for (const Rational& c : point) {
    if (c == 0) {
      throw std::domain_error("point has a zero coordinate (outside the torus)");
    }
  }
  Rational sum(0);
  for (const auto& [exponents, coeff] : terms_) {
    Rational value = coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (exponents[i] != 0) {
        value *= rational_pow(point[i], exponents[i]);
      }
    }
    sum += value;
  }
  return sum;
}

namespace {

void require_same_vars(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  if (f.var_count() != g.var_count()) {
    throw std::invalid_argument("variable count mismatch");
  }
}

}  // namespace

LaurentPolynomial operator-(const LaurentPolynomial& f) {
  LaurentPolynomial out(f.var_count());
  for (const auto& [e, c] : f.terms()) {
    out.add_term(e, -c);
  }
  return out;
}

LaurentPolynomial operator+(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  require_same_vars(f, g);
  LaurentPolynomial out = f;
  for (const auto& [e, c] : g.terms()) {
    out.add_term(e, c);
  }
  return out;
}

LaurentPolynomial operator-(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  require_same_vars(f, g);
  LaurentPolynomial out = f;
  for (const auto& [e, c] : g.terms()) {
    out.add_term(e, -c);
  }
  return out;
}

LaurentPolynomial operator*(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  require_same_vars(f, g);
  LaurentPolynomial out(f.var_count());
  ExponentVector e(static_cast<std::size_t>(f.var_count()), 0);
  for (const auto& [ef, cf] : f.terms()) {
    for (const auto& [eg, cg] : g.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = ef[i] + eg[i];
      }
      out.add_term(e, cf * cg);
    }
  }
  return out;
}

LaurentPolynomial operator*(const Rational& c, const LaurentPolynomial& f) {
  LaurentPolynomial out(f.var_count());
  for (const auto& [e, cf] : f.terms()) {
    out.add_term(e, c * cf);
  }
  return out;
}

namespace {

// Recursive-descent parser over the raw text; offsets in errors refer to the
// original string, whitespace included.
class Parser {
 public:
  Parser(std::string_view text, int var_count) : text_(text), n_(var_count) {}

  LaurentPolynomial parse() {
    LaurentPolynomial poly(n_);
    skip_ws();
    if (at_end()) {
      fail(pos_, "expected term");
    }
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    while (true) {
      parse_term(poly, negative);
      skip_ws();
      if (at_end()) {
        break;
      }
      char c = peek();
      if (c == '+') {
        negative = false;
      } else if (c == '-') {
        negative = true;
      } else {
        fail(pos_, "expected '+' or '-'");
      }
      ++pos_;
    }
    return poly;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(std::size_t at, const std::string& message) const {
    throw ParseError(at, message);
  }

  bool looks_like_number() const {
    if (at_end()) {
      return false;
    }
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return true;
    }
    if ((c == '-' || c == '+') && pos_ + 1 < text_.size()) {
      return std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) != 0;
    }
    return false;
  }

  void parse_term(LaurentPolynomial& poly, bool negative) {
    skip_ws();
    if (at_end()) {
      fail(pos_, "expected term");
    }
    Rational coeff(1);
    ExponentVector exponents(static_cast<std::size_t>(n_), 0);
    if (looks_like_number()) {
      coeff = parse_coefficient();
    } else if (peek() == 'x') {
      parse_factor(exponents);
    } else {
      fail(pos_, "expected term");
    }
    while (true) {
      skip_ws();
      if (at_end() || peek() != '*') {
        break;
      }
      ++pos_;
      parse_factor(exponents);
    }
    poly.add_term(exponents, negative ? Rational(-coeff) : coeff);
  }

  Rational parse_coefficient() {
    Integer num = parse_signed_integer();
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      std::size_t den_at = pos_;
      Integer den = parse_unsigned_integer();
      if (den == 0) {
        fail(den_at, "zero denominator");
      }
      return make_rational(num, den);
    }
    return Rational(num);
  }

  void parse_factor(ExponentVector& exponents) {
    skip_ws();
    if (at_end() || peek() != 'x') {
      fail(pos_, "expected variable");
    }
    std::size_t var_at = pos_;
    ++pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail(pos_, "expected variable index");
    }
    Integer index = parse_unsigned_integer();
    if (index < 1 || index > n_) {
      fail(var_at, "variable index out of range");
    }
    auto slot = static_cast<std::size_t>(index.convert_to<int>() - 1);
    std::int64_t exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      std::size_t exp_at = pos_;
      Integer e = parse_signed_integer();
      try {
        exponent = checked_int64(e, "exponent");
      } catch (const std::overflow_error&) {
        fail(exp_at, "exponent out of range");
      }
    }
    exponents[slot] += exponent;
  }

  Integer parse_signed_integer() {
    skip_ws();
    bool negative = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      ++pos_;
      skip_ws();
    }
    Integer value = parse_unsigned_integer();
    return negative ? Integer(-value) : value;
  }

  Integer parse_unsigned_integer() {
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail(pos_, "expected number");
    }
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPolynomial parse_laurent(std::string_view text, int var_count) {
  if (var_count < 1) {
    throw std::invalid_argument("variable count must be at least 1");
  }
  return Parser(text, var_count).parse();
}

std::string format_canonical(const LaurentPolynomial& f) {
  if (f.is_zero()) {
    return "0";
  }
  std::ostringstream out;
  bool first = true;
  const auto& terms = f.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [exponents, coeff] = *it;
    const bool negative = coeff < 0;
    if (first) {
      if (negative) {
        out << '-';
      }
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    Rational magnitude = negative ? Rational(-coeff) : coeff;
    std::string factors;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (exponents[i] == 0) {
        continue;
      }
      if (!factors.empty()) {
        factors += '*';
      }
      factors += 'x';
      factors += std::to_string(i + 1);
      if (exponents[i] != 1) {
        factors += '^';
        factors += std::to_string(exponents[i]);
      }
    }
    if (factors.empty()) {
      out << format_rational(magnitude);
    } else if (magnitude == 1) {
      out << factors;
    } else {
      out << format_rational(magnitude) << '*' << factors;
    }
  }
  return out.str();
}

}  // namespace loghessian
