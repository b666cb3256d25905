#include <doctest.h>

#include "loghessian/corpus.hpp"
#include "loghessian/laurent.hpp"

using namespace loghessian;

namespace {

LaurentPolynomial lp(const std::string& text, int n) { return parse_laurent(text, n); }

std::vector<LaurentPolynomial> sample_polys(int n, std::uint64_t seed, int count) {
  CorpusSpec spec;
  spec.n = n;
  spec.lattice_rank = n;
  spec.max_terms = 5;
  spec.exponent_bound = 4;
  spec.coefficient_bound = 7;
  spec.seed = seed;
  spec.instance_count = count;
  std::vector<LaurentPolynomial> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(generate_corpus_sample(spec, i));
  }
  return out;
}

}  // namespace

TEST_CASE("parse: terms combine and cancel") {
  const LaurentPolynomial f = lp("x1*x2 - x1*x2", 2);
  CHECK(f.is_zero());
  CHECK(f.term_count() == 0);
}

TEST_CASE("parse: coefficients, negative exponents, constants") {
  const LaurentPolynomial f = lp("3*x1^2*x2^-1 + 1/2", 2);
  CHECK(f.term_count() == 2);
  CHECK(f.coefficient({2, -1}) == Rational(3));
  CHECK(f.coefficient({0, 0}) == make_rational(1, 2));
}

TEST_CASE("parse: variable index out of range") {
  CHECK_THROWS_WITH_AS(lp("x1 + x7", 2), doctest::Contains("variable index out of range"),
                       ParseError);
  try {
    lp("x1 + x7", 2);
  } catch (const ParseError& e) {
    CHECK(e.offset() == 5);
  }
}

TEST_CASE("parse: syntax error carries the offset") {
  try {
    lp("x1 +* x2", 2);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
}

TEST_CASE("parse: zero denominator is rejected") {
  CHECK_THROWS_WITH_AS(lp("1/0", 1), doctest::Contains("zero denominator"), ParseError);
}

TEST_CASE("parse: misc error cases") {
  CHECK_THROWS_AS(lp("", 2), ParseError);
  CHECK_THROWS_AS(lp("   ", 2), ParseError);
  CHECK_THROWS_AS(lp("x", 2), ParseError);
  CHECK_THROWS_AS(lp("x1 x2", 2), ParseError);
  CHECK_THROWS_AS(lp("2*3", 2), ParseError);
  CHECK_THROWS_AS(lp("x0", 2), ParseError);
  CHECK_THROWS_AS(lp("x1^", 2), ParseError);
  CHECK_THROWS_AS(lp("1/-2", 2), ParseError);
}

TEST_CASE("parse: whitespace is ignored and exponents accumulate") {
  CHECK(lp("  x1 ^ 2 * x1", 1) == lp("x1^3", 1));
  CHECK(lp("x1^0", 1) == LaurentPolynomial::constant(1, Rational(1)));
}

TEST_CASE("format: zero polynomial") {
  CHECK(format_canonical(LaurentPolynomial(2)) == "0");
}

TEST_CASE("format: unit coefficients and constants") {
  LaurentPolynomial f(2);
  f.add_term({1, 1}, Rational(1));
  f.add_term({0, 0}, Rational(-2));
  CHECK(format_canonical(f) == "x1*x2 - 2");
}

TEST_CASE("format: fractional coefficient with a negative exponent") {
  LaurentPolynomial f(2);
  f.add_term({-1, 0}, make_rational(1, 2));
  CHECK(format_canonical(f) == "1/2*x1^-1");
}

TEST_CASE("format: leading negative term") {
  CHECK(format_canonical(lp("-x1 - 1", 1)) == "-x1 - 1");
}

TEST_CASE("add: examples") {
  CHECK(lp("x1 + x2", 2) + lp("-x2", 2) == lp("x1", 2));
  const LaurentPolynomial f = lp("2*x1^-3 + x2", 2);
  CHECK(f + LaurentPolynomial(2) == f);
  CHECK(lp("x1^-1", 1) + lp("x1^-1", 1) == lp("2*x1^-1", 1));
  CHECK_THROWS_AS(lp("x1", 1) + lp("x1", 2), std::invalid_argument);
}

TEST_CASE("mul: examples") {
  CHECK(lp("x1", 1) * lp("x1^-1", 1) == lp("1", 1));
  CHECK(lp("x1 + x2", 2) * lp("x1 - x2", 2) == lp("x1^2 - x2^2", 2));
  const LaurentPolynomial f = lp("x1^2*x2^-4 - 5", 2);
  CHECK(f * LaurentPolynomial::constant(2, Rational(1)) == f);
}

TEST_CASE("evaluate: examples") {
  const std::vector<Rational> p{Rational(3), Rational(2)};
  CHECK(lp("x1*x2^-1", 2).evaluate(p) == make_rational(3, 2));
  CHECK(LaurentPolynomial(2).evaluate(p) == Rational(0));
  CHECK(lp("x1^2 + x2", 2).evaluate({Rational(2), Rational(-1)}) == Rational(3));
  CHECK_THROWS_AS(lp("x1", 2).evaluate({Rational(0), Rational(1)}), std::domain_error);
  CHECK_THROWS_AS(lp("x1", 2).evaluate({Rational(1)}), std::invalid_argument);
}

TEST_CASE("ring laws on random polynomials") {
  for (int n = 1; n <= 3; ++n) {
    const auto polys = sample_polys(n, 77 + static_cast<std::uint64_t>(n), 6);
    for (std::size_t i = 0; i + 2 < polys.size(); ++i) {
      const auto& f = polys[i];
      const auto& g = polys[i + 1];
      const auto& h = polys[i + 2];
      CHECK(f + g == g + f);
      CHECK(f * g == g * f);
      CHECK((f + g) + h == f + (g + h));
      CHECK((f * g) * h == f * (g * h));
      CHECK(f * (g + h) == f * g + f * h);
    }
  }
}

TEST_CASE("format/parse round trip on random polynomials") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& f : sample_polys(n, 1234 + static_cast<std::uint64_t>(n), 8)) {
      CHECK(parse_laurent(format_canonical(f), n) == f);
    }
  }
}

TEST_CASE("evaluate is a ring homomorphism") {
  const auto polys = sample_polys(3, 999, 8);
  const std::vector<Rational> p{make_rational(3, 2), Rational(-2), make_rational(-5, 3)};
  for (std::size_t i = 0; i + 1 < polys.size(); i += 2) {
    const auto& f = polys[i];
    const auto& g = polys[i + 1];
    CHECK((f * g).evaluate(p) == f.evaluate(p) * g.evaluate(p));
    CHECK((f + g).evaluate(p) == f.evaluate(p) + g.evaluate(p));
  }
}
